#include <doctest.h>

#include "test_util.hpp"

using namespace ncwitt;
using namespace test_util;

namespace
{

std::size_t syntax_position(const std::string &text, const alphabet &a = xy())
{
    try {
        parse_poly(text, a);
    } catch (const syntax_error &e) {
        return e.position();
    }
    FAIL("no syntax error for '" << text << "'");
    return 0;
}

} // namespace

TEST_CASE("parse examples")
{
    CHECK(P("XY-YX") == mono("XY") - mono("YX"));
    CHECK(P("X^2Y^2 - XYXY") == mono("XXYY") - mono("XYXY"));
    CHECK(P("2X^2") == mono("XX", 2));
    CHECK(P("(X+Y)^2") == mono("XX") + mono("XY") + mono("YX") + mono("YY"));
    CHECK(P("0").is_zero());
    CHECK(P("-3") == mono("", -3));
    CHECK(P("X*Y") == mono("XY"));
    CHECK(P("  X  Y ") == mono("XY"));
    CHECK(P("X^0") == mono(""));
    CHECK(P("-XYXY + YXYX - XYYX - YXXY + 2XXYY") == expected_counterexample_omega1());
}

TEST_CASE("precedence")
{
    // ^ binds tighter than juxtaposition, which binds tighter than + and -.
    CHECK(P("XY^2") == mono("XYY"));
    CHECK(P("(XY)^2") == mono("XYXY"));
    CHECK(P("X - Y + X") == mono("X", 2) - mono("Y"));
    CHECK(P("-X^2") == mono("XX", -1));
    CHECK(P("2(X+Y)") == mono("X", 2) + mono("Y", 2));
    CHECK(P("X - -Y") == mono("X") + mono("Y"));
}

TEST_CASE("syntax errors carry positions")
{
    CHECK(syntax_position("") == 0);
    CHECK(syntax_position("X+") == 2);
    CHECK(syntax_position("X+*Y") == 2);
    CHECK(syntax_position("(X") == 2);
    CHECK(syntax_position("X)") == 1);
    CHECK(syntax_position("X^") == 2);
    CHECK(syntax_position("X^-1") == 2);
    CHECK(syntax_position("X $ Y") == 2);
}

TEST_CASE("unknown generators")
{
    try {
        parse_poly("XZ", xy());
        FAIL("expected unknown_generator");
    } catch (const unknown_generator &e) {
        CHECK(e.symbol() == "Z");
    }
    CHECK_THROWS_AS(parse_poly("x", xy()), unknown_generator);
}

TEST_CASE("multi-character generators need explicit products")
{
    const alphabet a{"x1", "x2"};
    const free_poly x1 = free_poly::generator(a, "x1");
    const free_poly x2 = free_poly::generator(a, "x2");
    CHECK(parse_poly("x1*x2 - 2*x2^2", a) == x1 * x2 - 2 * x2 * x2);
    CHECK(parse_poly("(x1 + x2)^2", a) == (x1 + x2) * (x1 + x2));
    CHECK_THROWS_AS(parse_poly("x1 x2", a), syntax_error);
    CHECK_THROWS_AS(parse_poly("x1x2", a), unknown_generator);
    CHECK(format_poly(parse_poly("2*x1^2*x2 - x2", a)) == "-x2 + 2*x1^2*x2");
}

TEST_CASE("parse_alphabet")
{
    CHECK(parse_alphabet("X,Y") == xy());
    CHECK(parse_alphabet("x1, x2").size() == 2);
    CHECK_THROWS_AS(parse_alphabet(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_alphabet("X,,Y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_alphabet("X,X"), std::invalid_argument);
    CHECK_THROWS_AS(parse_alphabet("X,Y+"), std::invalid_argument);
}

TEST_CASE("text form round trip")
{
    sampler s(61);
    const alphabet multi{"x1", "x2", "x3"};
    for (int i = 0; i < 50; ++i) {
        const free_poly f = s.random_poly(xy(), 5, 6, 20);
        const std::string text = format_poly(f);
        CHECK(P(text) == f);
        CHECK(format_poly(P(text)) == text);

        const free_poly g = s.random_poly(multi, 4, 5, 5);
        CHECK(parse_poly(format_poly(g), multi) == g);
    }
}
