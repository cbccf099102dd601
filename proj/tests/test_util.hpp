#ifndef NCWITT_TEST_UTIL_HPP
#define NCWITT_TEST_UTIL_HPP

#include <string>

#include <ncwitt/ncwitt.hpp>

namespace test_util
{

inline const ncwitt::alphabet &xy()
{
    static const ncwitt::alphabet a = ncwitt::alphabet::xy();
    return a;
}

// Word over {X, Y} from a string such as "XYXY".
inline ncwitt::word w(const std::string &s)
{
    std::vector<ncwitt::letter> l;
    for (char c : s) {
        l.push_back(c == 'X' ? 0 : 1);
    }
    return ncwitt::word{std::move(l)};
}

// Monomial c * word over {X, Y}.
inline ncwitt::free_poly mono(const std::string &s, long c = 1)
{
    return ncwitt::free_poly::monomial(xy(), w(s), c);
}

inline ncwitt::free_poly P(const std::string &text, const ncwitt::alphabet &a = xy())
{
    return ncwitt::parse_poly(text, a);
}

inline ncwitt::abel_poly cls(const std::string &s, long c = 1)
{
    ncwitt::abel_poly out(xy());
    out.add_term(ncwitt::circular_class(w(s)), c);
    return out;
}

} // namespace test_util

#endif
