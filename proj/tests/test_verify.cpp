#include <doctest.h>

#include "test_util.hpp"

using namespace ncwitt;

TEST_CASE("every check passes with the default options")
{
    verify_options opts;
    const verify_report rep = run_verify(check_ids(), opts);
    CHECK(rep.passed);
    REQUIRE(rep.checks.size() == check_ids().size());
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const auto &c = rep.checks[i];
        CHECK_MESSAGE(c.passed, c.id << ": " << c.details);
        CHECK(c.id == check_ids()[i]);
        CHECK(c.cases > 0);
        CHECK_FALSE(c.anchor.empty());
    }
}

TEST_CASE("check ids")
{
    CHECK(check_ids().size() == 9);
    CHECK(is_check_id("lemma-xyc"));
    CHECK_FALSE(is_check_id("nope"));
    CHECK_THROWS_AS(run_check("nope", verify_options{}), std::invalid_argument);
    CHECK_THROWS_AS(run_verify({"wagen", "nope"}, verify_options{}), std::invalid_argument);
}

TEST_CASE("report follows the requested order")
{
    verify_options opts;
    const verify_report rep = run_verify({"pin", "lemma-xyc", "wagen"}, opts);
    REQUIRE(rep.checks.size() == 3);
    CHECK(rep.checks[0].id == "pin");
    CHECK(rep.checks[1].id == "lemma-xyc");
    CHECK(rep.checks[2].id == "wagen");
}

TEST_CASE("runs are reproducible for a seed")
{
    verify_options opts;
    opts.seed = 99;
    opts.parallel = false;
    const check_result a = run_check("omegar0", opts);
    const check_result b = run_check("omegar0", opts);
    CHECK(a.passed);
    CHECK(a.details == b.details);
    CHECK(a.cases == b.cases);
}

TEST_CASE("counterexample check at a larger level")
{
    verify_options opts;
    opts.level = 3;
    const check_result r = run_check("counterexample", opts);
    CHECK(r.passed);
    CHECK(r.details.find("n = 3") != std::string::npos);
}
