#ifndef NCWITT_FREEALG_HPP
#define NCWITT_FREEALG_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ncwitt
{

using integer = mpz_class;

// Ordered set of generator names. Declaration order is the base order used by
// word comparison and by the least-rotation section of the abelianization.
class alphabet
{
public:
    explicit alphabet(std::vector<std::string> names);
    alphabet(std::initializer_list<std::string> names) : alphabet(std::vector<std::string>(names)) {}

    // The default two-letter alphabet X < Y.
    static alphabet xy();

    std::size_t size() const noexcept
    {
        return m_names->size();
    }
    const std::string &name(std::size_t i) const
    {
        return m_names->at(i);
    }
    const std::vector<std::string> &names() const noexcept
    {
        return *m_names;
    }
    std::optional<std::size_t> index_of(std::string_view name) const;
    // True when every generator name is one character long, so that words can
    // be written by juxtaposition.
    bool single_char() const noexcept
    {
        return m_single_char;
    }

    friend bool operator==(const alphabet &a, const alphabet &b) noexcept
    {
        return a.m_names == b.m_names || *a.m_names == *b.m_names;
    }

private:
    std::shared_ptr<const std::vector<std::string>> m_names;
    bool m_single_char = true;
};

using letter = std::uint16_t;

// A monomial of the free algebra: a finite sequence of generator indices.
// The empty word is the unit.
class word
{
public:
    word() = default;
    explicit word(std::vector<letter> letters) : m_letters(std::move(letters)) {}
    word(std::initializer_list<letter> letters) : m_letters(letters) {}

    std::size_t degree() const noexcept
    {
        return m_letters.size();
    }
    bool empty() const noexcept
    {
        return m_letters.empty();
    }
    std::span<const letter> letters() const noexcept
    {
        return m_letters;
    }
    letter operator[](std::size_t i) const
    {
        return m_letters[i];
    }

    word concat(const word &other) const;
    // Concatenation power w^k; w^0 is the empty word.
    word power(std::size_t k) const;
    // Rotation moving the first `shift` letters to the back.
    word rotate(std::size_t shift) const;

    // Degree first, then lexicographic by generator index.
    friend std::strong_ordering operator<=>(const word &a, const word &b) noexcept;
    friend bool operator==(const word &a, const word &b) noexcept = default;

private:
    std::vector<letter> m_letters;
};

struct word_hash {
    std::size_t operator()(const word &w) const noexcept;
};

// Degree of a polynomial. The zero polynomial has degree minus infinity,
// which compares below every finite degree and absorbs addition.
class degree_t
{
public:
    constexpr degree_t() noexcept = default;
    constexpr explicit degree_t(std::size_t d) noexcept : m_value(d) {}

    static constexpr degree_t minus_infinity() noexcept
    {
        return degree_t{};
    }
    constexpr bool is_minus_infinity() const noexcept
    {
        return !m_value.has_value();
    }
    constexpr std::size_t value() const
    {
        return m_value.value();
    }

    friend constexpr degree_t operator+(degree_t a, degree_t b) noexcept
    {
        if (a.is_minus_infinity() || b.is_minus_infinity()) {
            return minus_infinity();
        }
        return degree_t{*a.m_value + *b.m_value};
    }
    friend constexpr bool operator==(degree_t, degree_t) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(degree_t a, degree_t b) noexcept
    {
        if (a.is_minus_infinity() || b.is_minus_infinity()) {
            return b.is_minus_infinity() <=> a.is_minus_infinity();
        }
        return *a.m_value <=> *b.m_value;
    }

private:
    std::optional<std::size_t> m_value;
};

std::ostream &operator<<(std::ostream &, degree_t);

// Element of Z{X_1,...,X_k}: a finite map from words to nonzero integers.
class free_poly
{
public:
    using term_map = std::map<word, integer>;

    explicit free_poly(alphabet a) : m_alphabet(std::move(a)) {}
    free_poly(alphabet a, term_map terms);

    static free_poly constant(alphabet a, const integer &c);
    static free_poly monomial(alphabet a, word w, const integer &c = 1);
    // The generator with the given name, as a degree-one monomial.
    static free_poly generator(alphabet a, std::string_view name);

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
    integer coefficient(const word &w) const;

    // Adds c*w in place, dropping the term if it cancels.
    void add_term(const word &w, const integer &c);

    free_poly operator-() const;
    free_poly &operator+=(const free_poly &other);
    free_poly &operator-=(const free_poly &other);
    free_poly &operator*=(const integer &c);

    friend free_poly operator+(free_poly a, const free_poly &b)
    {
        a += b;
        return a;
    }
    friend free_poly operator-(free_poly a, const free_poly &b)
    {
        a -= b;
        return a;
    }
    friend free_poly operator*(const free_poly &a, const free_poly &b);
    friend free_poly operator*(free_poly a, const integer &c)
    {
        a *= c;
        return a;
    }
    friend free_poly operator*(const integer &c, free_poly a)
    {
        a *= c;
        return a;
    }
    friend bool operator==(const free_poly &a, const free_poly &b) noexcept
    {
        return a.m_alphabet == b.m_alphabet && a.m_terms == b.m_terms;
    }

    // Canonical text form, see format_poly().
    std::string to_string() const;

private:
    alphabet m_alphabet;
    term_map m_terms;
};

std::ostream &operator<<(std::ostream &, const free_poly &);

// Throws alphabet_mismatch unless both operands share an alphabet.
void require_same_alphabet(const alphabet &a, const alphabet &b);

free_poly poly_add(const free_poly &f, const free_poly &g);
free_poly poly_mul(const free_poly &f, const free_poly &g);
free_poly poly_pow(const free_poly &f, std::size_t k);
// f^(p^k), computed by k successive p-th powers.
free_poly poly_pow_prime_power(const free_poly &f, unsigned p, std::size_t k);
// The additive commutator fg - gf.
free_poly commutator(const free_poly &f, const free_poly &g);
// Replaces every word w by w^p, keeping coefficients.
free_poly phi_map(const free_poly &f, unsigned p);
free_poly graded_component(const free_poly &f, std::size_t d);
// Splits f into terms of degree < n and terms of degree >= n.
std::pair<free_poly, free_poly> filtration_split(const free_poly &f, std::size_t n);
// Coefficients reduced to their representative in [0, m).
free_poly reduce_mod(const free_poly &f, const integer &m);

// Word text in canonical form: runs written as `X^k`; generators separated by
// `*` when the alphabet has multi-character names.
std::string format_word(const alphabet &a, const word &w);
// Word text with every letter spelled out, e.g. XXYY.
std::string format_word_plain(const alphabet &a, const word &w);

// Canonical text of a polynomial: terms sorted by (degree, lex), coefficients
// omitted when +-1, e.g. `X^2Y^2 - XYXY`. The zero polynomial prints as `0`.
std::string format_poly(const free_poly &f);

} // namespace ncwitt

#endif
