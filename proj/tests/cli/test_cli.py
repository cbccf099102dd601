import json
import os
import subprocess

import pytest

CLI = os.environ.get("NCWITT_CLI", "ncwitt")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)


def test_ghost():
    r = run("ghost", "--p", "2", "--level", "2", "XY-YX", "0")
    assert r.returncode == 0
    assert r.stdout.strip() == "(0, -2[XXYY] + 2[XYXY])"


def test_omega():
    r = run("omega", "--p", "2", "--level", "1", "X", "Y")
    assert r.returncode == 0
    assert r.stdout.strip() == "(X, 2Y + X^2)"


def test_rmap():
    r = run("rmap", "--p", "2", "--level", "2", "XY-YX", "0")
    assert r.returncode == 0
    assert r.stdout.strip() == "(XY - YX, X^2Y^2 - XYXY)"


def test_rmap_json():
    r = run("rmap", "--format", "json", "--level", "2", "XY-YX")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert set(doc) == {"command", "params", "result"}
    assert doc["command"] == "rmap"
    assert doc["params"]["p"] == 2
    assert doc["result"]["r"] == ["XY - YX", "X^2Y^2 - XYXY"]
    assert doc["result"]["ghost_vanishes"] is True


def test_hmember_and_abelianize():
    r = run("hmember", "--", "-XYXY + YXYX - XYYX - YXXY + 2XXYY")
    assert (r.returncode, r.stdout.strip()) == (0, "false")
    r = run("abelianize", "YXXY", "XY-YX")
    assert r.stdout.split("\n")[:2] == ["[XXYY]", "0"]


def test_exit_codes():
    assert run("rmap", "X").returncode == 1
    assert run("ghost", "X+").returncode == 2
    assert run("ghost", "Z").returncode == 2
    assert run("ghost", "--level", "1", "X", "Y").returncode == 2
    assert run("ghost", "--p", "4", "X").returncode == 2
    assert run("nosuchcommand").returncode == 2
    assert run("verify", "nosuchcheck").returncode == 2
    assert run("hmember", "--p", "3", "X").returncode == 1


def test_verify_lemma_xyc():
    r = run("verify", "lemma-xyc")
    assert r.returncode == 0
    assert "PASS lemma-xyc" in r.stdout
    assert r.stdout.strip().endswith("overall: pass")


@pytest.mark.parametrize("level", ["2", "3"])
def test_verify_counterexample_json(level):
    r = run("verify", "counterexample", "--level", level, "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert set(doc) == {"command", "params", "report"}
    assert doc["report"]["status"] == "pass"
    (check,) = doc["report"]["checks"]
    assert check["check_id"] == "counterexample"
    assert check["status"] == "pass"
    assert {"anchor", "cases", "details", "seconds"} <= set(check)


def test_verify_all():
    r = run("verify", "--all", "--p", "2")
    assert r.returncode == 0
    assert r.stdout.count("PASS ") == 9
