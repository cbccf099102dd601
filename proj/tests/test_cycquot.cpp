#include <doctest.h>

#include <algorithm>
#include <string>

#include "test_util.hpp"

using namespace ncwitt;
using namespace test_util;

namespace
{

// Least rotation by materializing every rotation as a string.
std::string brute_least_rotation(const std::string &s)
{
    std::string best = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        best = std::min(best, s.substr(i) + s.substr(0, i));
    }
    return best;
}

std::string as_string(const word &wd)
{
    std::string out;
    for (letter l : wd.letters()) {
        out += l == 0 ? 'X' : 'Y';
    }
    return out;
}

} // namespace

TEST_CASE("circular_class")
{
    CHECK(circular_class(w("YXXY")).canonical() == w("XXYY"));
    CHECK(circular_class(w("YXYX")).canonical() == w("XYXY"));
    CHECK(circular_class(w("X")).canonical() == w("X"));
    CHECK(circular_class(w("")).canonical() == w(""));
    CHECK(circular_class(w("XYYX")) == circular_class(w("YYXX")));
    CHECK_FALSE(circular_class(w("XXYY")) == circular_class(w("XYXY")));
}

TEST_CASE("circular_class agrees with brute-force rotation")
{
    sampler s(21);
    for (int i = 0; i < 300; ++i) {
        const word wd = s.random_word(xy(), 0, 12);
        const word c = circular_class(wd).canonical();
        CHECK(as_string(c) == brute_least_rotation(as_string(wd)));
        // Every rotation lands in the same class.
        for (std::size_t k = 0; k < wd.degree(); ++k) {
            CHECK(circular_class(wd.rotate(k)).canonical() == c);
        }
    }
    // Three letters: rotations of 21020 are 10202, 02021, 20210, 02102.
    CHECK(circular_class(word{2, 1, 0, 2, 0}).canonical() == word{0, 2, 0, 2, 1});
}

TEST_CASE("abelianize")
{
    CHECK(abelianize(mono("XY") - mono("YX")).is_zero());
    CHECK(abelianize(mono("XYYX")) == cls("XXYY"));
    CHECK(abelianize(mono("XXYY") + mono("XYXY")) == cls("XXYY") + cls("XYXY"));
    CHECK(abelianize(mono("", 3)) == cls("", 3));
    CHECK(abelianize(mono("XYXY") + mono("YXYX")) == cls("XYXY", 2));
}

TEST_CASE("sigma0")
{
    CHECK(sigma0(cls("XXYY")) == mono("XXYY"));
    CHECK(sigma0(cls("XYXY") - cls("XXYY")) == mono("XYXY") - mono("XXYY"));
    CHECK(sigma0(abel_poly(xy())).is_zero());
    CHECK(sigma0(cls("YYX", 4)) == mono("XYY", 4));
}

TEST_CASE("divide_exact")
{
    CHECK(divide_exact(cls("XYXY", 2) - cls("XXYY", 2), 2) == cls("XYXY") - cls("XXYY"));
    CHECK(divide_exact(abel_poly(xy()), 4).is_zero());
    CHECK_THROWS_AS(divide_exact(cls("X"), 2), not_divisible);
    CHECK_THROWS_AS(divide_exact(cls("X"), 0), std::invalid_argument);
    CHECK(divide_exact(cls("X", -6), 3) == cls("X", -2));
}

TEST_CASE("in_commutator_subgroup")
{
    CHECK(in_commutator_subgroup(mono("XY") - mono("YX")));
    CHECK(in_commutator_subgroup(mono("XYXY") - mono("YXYX")));
    CHECK_FALSE(in_commutator_subgroup(mono("XXYY") - mono("XYXY")));
    CHECK(in_commutator_subgroup(free_poly(xy())));
    CHECK_FALSE(in_commutator_subgroup(mono("")));
}

TEST_CASE("abel text form")
{
    CHECK(format_abel(abel_poly(xy())) == "0");
    CHECK(format_abel(cls("XYXY") - cls("XXYY")) == "-[XXYY] + [XYXY]");
    CHECK(format_abel(cls("XYXY", 2) - cls("XXYY", 2)) == "-2[XXYY] + 2[XYXY]");
    CHECK(format_abel(cls("", 1) + cls("X")) == "1 + [X]");
}

TEST_CASE("abelianization properties")
{
    sampler s(22);
    for (int i = 0; i < 40; ++i) {
        const free_poly f = s.random_poly(xy(), 4, 6);
        const free_poly g = s.random_poly(xy(), 4, 6);

        // sigma0 is a section.
        const abel_poly alpha = abelianize(f);
        CHECK(abelianize(sigma0(alpha)) == alpha);

        // Trace property.
        const free_poly c = f * g - g * f;
        CHECK(abelianize(c).is_zero());
        // [A,A] is graded.
        for (std::size_t d = 0; d <= 8; ++d) {
            CHECK(abelianize(graded_component(c, d)).is_zero());
        }
        // Homogeneous inputs stay homogeneous.
        const free_poly h = graded_component(f, 3);
        const abel_poly ah = abelianize(h);
        for (const auto &[cw, coeff] : ah.terms()) {
            CHECK(cw.degree() == 3);
        }

        const integer d = s.uniform(1, 9);
        CHECK(divide_exact(d * alpha, d) == alpha);

        // (f + g)^2 - f^2 - g^2 = fg + gf is 2fg mod [A,A].
        const abel_poly cross = abelianize((f + g) * (f + g) - f * f - g * g);
        CHECK(divisible_by(cross, 2));
    }
}
