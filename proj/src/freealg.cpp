#include <ncwitt/freealg.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <ncwitt/errors.hpp>

namespace ncwitt
{

alphabet::alphabet(std::vector<std::string> names)
{
    if (names.empty()) {
        throw std::invalid_argument("alphabet must contain at least one generator");
    }
    if (names.size() > std::size_t(1) << (8 * sizeof(letter))) {
        throw std::invalid_argument("alphabet too large");
    }
    std::set<std::string> seen;
    for (const auto &n : names) {
        if (n.empty()) {
            throw std::invalid_argument("generator names must be non-empty");
        }
        for (char ch : n) {
            if (static_cast<unsigned char>(ch) <= 0x20 || static_cast<unsigned char>(ch) >= 0x7f) {
                throw std::invalid_argument("generator name '" + n + "' is not printable");
            }
        }
        if (!seen.insert(n).second) {
            throw std::invalid_argument("duplicate generator name '" + n + "'");
        }
        if (n.size() != 1) {
            m_single_char = false;
        }
    }
    m_names = std::make_shared<const std::vector<std::string>>(std::move(names));
}

alphabet alphabet::xy()
{
    static const alphabet instance{"X", "Y"};
    return instance;
}

std::optional<std::size_t> alphabet::index_of(std::string_view name) const
{
    const auto &v = *m_names;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

word word::concat(const word &other) const
{
    std::vector<letter> out;
    out.reserve(m_letters.size() + other.m_letters.size());
    out.insert(out.end(), m_letters.begin(), m_letters.end());
    out.insert(out.end(), other.m_letters.begin(), other.m_letters.end());
    return word{std::move(out)};
}

word word::power(std::size_t k) const
{
    std::vector<letter> out;
    out.reserve(m_letters.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
        out.insert(out.end(), m_letters.begin(), m_letters.end());
    }
    return word{std::move(out)};
}

word word::rotate(std::size_t shift) const
{
    if (m_letters.empty()) {
        return *this;
    }
    std::vector<letter> out(m_letters);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
    return word{std::move(out)};
}

std::strong_ordering operator<=>(const word &a, const word &b) noexcept
{
    if (auto c = a.m_letters.size() <=> b.m_letters.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.m_letters.begin(), a.m_letters.end(), b.m_letters.begin(),
                                                  b.m_letters.end());
}

std::size_t word_hash::operator()(const word &w) const noexcept
{
    // FNV-1a over the letters.
    std::uint64_t h = 1469598103934665603ull;
    for (letter l : w.letters()) {
        h ^= l;
        h *= 1099511628211ull;
    }
    h ^= w.degree();
    return static_cast<std::size_t>(h);
}

std::ostream &operator<<(std::ostream &os, degree_t d)
{
    if (d.is_minus_infinity()) {
        return os << "-inf";
    }
    return os << d.value();
}

void require_same_alphabet(const alphabet &a, const alphabet &b)
{
    if (!(a == b)) {
        throw alphabet_mismatch();
    }
}

free_poly::free_poly(alphabet a, term_map terms) : m_alphabet(std::move(a))
{
    for (auto &[w, c] : terms) {
        for (letter l : w.letters()) {
            if (l >= m_alphabet.size()) {
                throw std::invalid_argument("word uses a letter outside the alphabet");
            }
        }
        if (c != 0) {
            m_terms.emplace(w, std::move(c));
        }
    }
}

free_poly free_poly::constant(alphabet a, const integer &c)
{
    free_poly f(std::move(a));
    f.add_term(word{}, c);
    return f;
}

free_poly free_poly::monomial(alphabet a, word w, const integer &c)
{
    term_map t;
    t.emplace(std::move(w), c);
    return free_poly(std::move(a), std::move(t));
}

free_poly free_poly::generator(alphabet a, std::string_view name)
{
    auto idx = a.index_of(name);
    if (!idx) {
        throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
    }
    return monomial(std::move(a), word{static_cast<letter>(*idx)});
}

degree_t free_poly::degree() const noexcept
{
    if (m_terms.empty()) {
        return degree_t::minus_infinity();
    }
    // Words are ordered degree-first, so the last key has maximal degree.
    return degree_t{m_terms.rbegin()->first.degree()};
}

integer free_poly::coefficient(const word &w) const
{
    auto it = m_terms.find(w);
    return it == m_terms.end() ? integer(0) : it->second;
}

void free_poly::add_term(const word &w, const integer &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

free_poly free_poly::operator-() const
{
    free_poly out(*this);
    for (auto &[w, c] : out.m_terms) {
        c = -c;
    }
    return out;
}

free_poly &free_poly::operator+=(const free_poly &other)
{
    require_same_alphabet(m_alphabet, other.m_alphabet);
    for (const auto &[w, c] : other.m_terms) {
        add_term(w, c);
    }
    return *this;
}

free_poly &free_poly::operator-=(const free_poly &other)
{
    require_same_alphabet(m_alphabet, other.m_alphabet);
    for (const auto &[w, c] : other.m_terms) {
        add_term(w, -c);
    }
    return *this;
}

free_poly &free_poly::operator*=(const integer &c)
{
    if (c == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[w, v] : m_terms) {
        v *= c;
    }
    return *this;
}

free_poly operator*(const free_poly &a, const free_poly &b)
{
    require_same_alphabet(a.m_alphabet, b.m_alphabet);
    if (a.is_zero() || b.is_zero()) {
        return free_poly(a.m_alphabet);
    }
    std::unordered_map<word, integer, word_hash> acc;
    acc.reserve(a.size() * b.size());
    integer prod;
    for (const auto &[wa, ca] : a.m_terms) {
        for (const auto &[wb, cb] : b.m_terms) {
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            acc[wa.concat(wb)] += prod;
        }
    }
    free_poly out(a.m_alphabet);
    for (auto &[w, c] : acc) {
        if (c != 0) {
            out.m_terms.emplace(w, std::move(c));
        }
    }
    return out;
}

std::string free_poly::to_string() const
{
    return format_poly(*this);
}

std::ostream &operator<<(std::ostream &os, const free_poly &f)
{
    return os << format_poly(f);
}

free_poly poly_add(const free_poly &f, const free_poly &g)
{
    return f + g;
}

free_poly poly_mul(const free_poly &f, const free_poly &g)
{
    return f * g;
}

free_poly poly_pow(const free_poly &f, std::size_t k)
{
    free_poly result = free_poly::constant(f.get_alphabet(), 1);
    free_poly base = f;
    while (k > 0) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

free_poly poly_pow_prime_power(const free_poly &f, unsigned p, std::size_t k)
{
    free_poly out = f;
    for (std::size_t i = 0; i < k; ++i) {
        out = poly_pow(out, p);
    }
    return out;
}

free_poly commutator(const free_poly &f, const free_poly &g)
{
    return f * g - g * f;
}

free_poly phi_map(const free_poly &f, unsigned p)
{
    if (p < 2) {
        throw std::invalid_argument("phi_map requires p >= 2");
    }
    free_poly out(f.get_alphabet());
    for (const auto &[w, c] : f.terms()) {
        // w -> w^p is injective on words, so no coefficients collide.
        out.add_term(w.power(p), c);
    }
    return out;
}

free_poly graded_component(const free_poly &f, std::size_t d)
{
    free_poly out(f.get_alphabet());
    for (const auto &[w, c] : f.terms()) {
        if (w.degree() == d) {
            out.add_term(w, c);
        }
    }
    return out;
}

std::pair<free_poly, free_poly> filtration_split(const free_poly &f, std::size_t n)
{
    free_poly low(f.get_alphabet()), high(f.get_alphabet());
    for (const auto &[w, c] : f.terms()) {
        (w.degree() < n ? low : high).add_term(w, c);
    }
    return {std::move(low), std::move(high)};
}

free_poly reduce_mod(const free_poly &f, const integer &m)
{
    if (m < 2) {
        throw std::invalid_argument("reduce_mod requires a modulus >= 2");
    }
    free_poly out(f.get_alphabet());
    integer r;
    for (const auto &[w, c] : f.terms()) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        out.add_term(w, r);
    }
    return out;
}

std::string format_word(const alphabet &a, const word &w)
{
    std::string out;
    const bool sep = !a.single_char();
    const auto letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) {
            ++j;
        }
        if (sep && i > 0) {
            out += '*';
        }
        out += a.name(letters[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

std::string format_word_plain(const alphabet &a, const word &w)
{
    std::string out;
    const bool sep = !a.single_char();
    for (std::size_t i = 0; i < w.degree(); ++i) {
        if (sep && i > 0) {
            out += '*';
        }
        out += a.name(w[i]);
    }
    return out;
}

std::string format_poly(const free_poly &f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[w, c] : f.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        integer mag = abs(c);
        if (w.empty()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str();
            if (!f.get_alphabet().single_char()) {
                out += '*';
            }
        }
        out += format_word(f.get_alphabet(), w);
    }
    return out;
}

} // namespace ncwitt
