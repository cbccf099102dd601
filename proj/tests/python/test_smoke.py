import pytest

import ncwitt


def test_counterexample_rmap():
    out = ncwitt.rmap(["XY-YX", "0"])
    assert out["r"] == ["XY - YX", "X^2Y^2 - XYXY"]
    assert out["ghost_vanishes"] is True
    assert out["audit"][0]["divisor"] == 2
    assert out["audit"][0]["quotient"] == "-[XXYY] + [XYXY]"


def test_ghost_and_omega():
    assert ncwitt.ghost(["XY-YX", "0"]) == ["0", "-2[XXYY] + 2[XYXY]"]
    assert ncwitt.omega(["X", "Y"]) == ["X", "2Y + X^2"]
    assert ncwitt.omega(["X", "Y"], p=3) == ["X", "3Y + X^3"]


def test_h_membership():
    assert not ncwitt.h_membership("-XYXY + YXYX - XYYX - YXXY + 2XXYY")
    assert ncwitt.h_membership("3X^5 + X^4 + 2XYXY")


def test_abelianize_and_normalize():
    assert ncwitt.abelianize("XY - YX") == "0"
    assert ncwitt.abelianize("YXXY") == "[XXYY]"
    assert ncwitt.normalize("(X+Y)^2") == "X^2 + XY + YX + Y^2"
    assert ncwitt.normalize("x1*x2", alphabet="x1,x2") == "x1*x2"


def test_errors():
    with pytest.raises(ncwitt.EpsilonNotCommutator):
        ncwitt.rmap(["X"])
    with pytest.raises(ncwitt.ParseError):
        ncwitt.normalize("X+")
    with pytest.raises(ncwitt.UnknownGenerator):
        ncwitt.normalize("Z")
    with pytest.raises(ncwitt.DegreeCapExceeded):
        ncwitt.rmap(["XY-YX", "0", "0"], degree_cap=4)
    assert issubclass(ncwitt.NotDivisible, ncwitt.NcwittError)


def test_verify_subset():
    rows = ncwitt.verify(["lemma-xyc", "pin"])
    assert [r["check_id"] for r in rows] == ["lemma-xyc", "pin"]
    assert all(r["status"] == "pass" for r in rows)
    assert "counterexample" in ncwitt.check_ids()


def test_counterexample_report():
    passed, text = ncwitt.counterexample_report(3)
    assert passed
    assert text.endswith("PASS\n")
