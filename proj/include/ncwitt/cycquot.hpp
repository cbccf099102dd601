#ifndef NCWITT_CYCQUOT_HPP
#define NCWITT_CYCQUOT_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>

#include <ncwitt/freealg.hpp>

namespace ncwitt
{

// Class of a word under cyclic rotation, stored as its least rotation.
class circular_word
{
public:
    const word &canonical() const noexcept
    {
        return m_canonical;
    }
    std::size_t degree() const noexcept
    {
        return m_canonical.degree();
    }

    friend std::strong_ordering operator<=>(const circular_word &, const circular_word &) noexcept = default;
    friend bool operator==(const circular_word &, const circular_word &) noexcept = default;

private:
    explicit circular_word(word w) : m_canonical(std::move(w)) {}
    friend circular_word circular_class(const word &);

    word m_canonical;
};

// Least rotation of w in lexicographic order, found by enumerating all
// rotations. Periodic words simply repeat rotations.
circular_word circular_class(const word &w);

// Element of A/[A,A]: integer combination of circular words.
class abel_poly
{
public:
    using term_map = std::map<circular_word, integer>;

    explicit abel_poly(alphabet a) : m_alphabet(std::move(a)) {}

    const alphabet &get_alphabet() const noexcept
    {
        return m_alphabet;
    }
    const term_map &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t size() const noexcept
    {
        return m_terms.size();
    }
    degree_t degree() const noexcept;
    integer coefficient(const circular_word &c) const;

    void add_term(const circular_word &c, const integer &v);

    abel_poly operator-() const;
    abel_poly &operator+=(const abel_poly &other);
    abel_poly &operator-=(const abel_poly &other);
    abel_poly &operator*=(const integer &c);

    friend abel_poly operator+(abel_poly a, const abel_poly &b)
    {
        a += b;
        return a;
    }
    friend abel_poly operator-(abel_poly a, const abel_poly &b)
    {
        a -= b;
        return a;
    }
    friend abel_poly operator*(abel_poly a, const integer &c)
    {
        a *= c;
        return a;
    }
    friend abel_poly operator*(const integer &c, abel_poly a)
    {
        a *= c;
        return a;
    }
    friend bool operator==(const abel_poly &a, const abel_poly &b) noexcept
    {
        return a.m_alphabet == b.m_alphabet && a.m_terms == b.m_terms;
    }

    std::string to_string() const;

private:
    alphabet m_alphabet;
    term_map m_terms;
};

std::ostream &operator<<(std::ostream &, const abel_poly &);

// Image of f in A/[A,A].
abel_poly abelianize(const free_poly &f);
// Additive section of abelianize sending each class to its least rotation.
free_poly sigma0(const abel_poly &a);
// Exact division of every coefficient by d. Throws not_divisible.
abel_poly divide_exact(const abel_poly &a, const integer &d);
// True iff every coefficient is a multiple of d.
bool divisible_by(const abel_poly &a, const integer &d);
bool in_commutator_subgroup(const free_poly &f);

abel_poly reduce_mod(const abel_poly &a, const integer &m);
// Terms of degree <= d.
abel_poly truncate_degree(const abel_poly &a, std::size_t d);

// Text form `[XYXY] - [XXYY]`-style, classes in ascending (degree, lex) order.
std::string format_abel(const abel_poly &a);

} // namespace ncwitt

#endif
