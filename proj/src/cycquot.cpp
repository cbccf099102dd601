#include <ncwitt/cycquot.hpp>

#include <stdexcept>
#include <unordered_map>

#include <ncwitt/errors.hpp>

namespace ncwitt
{

circular_word circular_class(const word &w)
{
    const auto letters = w.letters();
    const std::size_t n = letters.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t k = 0; k < n; ++k) {
            const letter a = letters[(s + k) % n], b = letters[(best + k) % n];
            if (a != b) {
                if (a < b) {
                    best = s;
                }
                break;
            }
        }
    }
    return circular_word{w.rotate(best)};
}

degree_t abel_poly::degree() const noexcept
{
    if (m_terms.empty()) {
        return degree_t::minus_infinity();
    }
    return degree_t{m_terms.rbegin()->first.degree()};
}

integer abel_poly::coefficient(const circular_word &c) const
{
    auto it = m_terms.find(c);
    return it == m_terms.end() ? integer(0) : it->second;
}

void abel_poly::add_term(const circular_word &c, const integer &v)
{
    if (v == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

abel_poly abel_poly::operator-() const
{
    abel_poly out(*this);
    for (auto &[w, c] : out.m_terms) {
        c = -c;
    }
    return out;
}

abel_poly &abel_poly::operator+=(const abel_poly &other)
{
    require_same_alphabet(m_alphabet, other.m_alphabet);
    for (const auto &[w, c] : other.m_terms) {
        add_term(w, c);
    }
    return *this;
}

abel_poly &abel_poly::operator-=(const abel_poly &other)
{
    require_same_alphabet(m_alphabet, other.m_alphabet);
    for (const auto &[w, c] : other.m_terms) {
        add_term(w, -c);
    }
    return *this;
}

abel_poly &abel_poly::operator*=(const integer &c)
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

std::string abel_poly::to_string() const
{
    return format_abel(*this);
}

std::ostream &operator<<(std::ostream &os, const abel_poly &a)
{
    return os << format_abel(a);
}

abel_poly abelianize(const free_poly &f)
{
    std::unordered_map<word, integer, word_hash> acc;
    acc.reserve(f.size());
    for (const auto &[w, c] : f.terms()) {
        acc[circular_class(w).canonical()] += c;
    }
    abel_poly out(f.get_alphabet());
    for (const auto &[w, c] : acc) {
        // w is already its own least rotation.
        out.add_term(circular_class(w), c);
    }
    return out;
}

free_poly sigma0(const abel_poly &a)
{
    free_poly out(a.get_alphabet());
    for (const auto &[w, c] : a.terms()) {
        out.add_term(w.canonical(), c);
    }
    return out;
}

bool divisible_by(const abel_poly &a, const integer &d)
{
    for (const auto &[w, c] : a.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
            return false;
        }
    }
    return true;
}

abel_poly divide_exact(const abel_poly &a, const integer &d)
{
    if (d < 1) {
        throw std::invalid_argument("divide_exact requires a positive divisor");
    }
    abel_poly out(a.get_alphabet());
    integer q;
    for (const auto &[w, c] : a.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
            throw not_divisible("coefficient " + c.get_str() + " of [" + format_word_plain(a.get_alphabet(), w.canonical())
                                + "] is not divisible by " + d.get_str());
        }
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        out.add_term(w, q);
    }
    return out;
}

bool in_commutator_subgroup(const free_poly &f)
{
    return abelianize(f).is_zero();
}

abel_poly reduce_mod(const abel_poly &a, const integer &m)
{
    if (m < 2) {
        throw std::invalid_argument("reduce_mod requires a modulus >= 2");
    }
    abel_poly out(a.get_alphabet());
    integer r;
    for (const auto &[w, c] : a.terms()) {
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        out.add_term(w, r);
    }
    return out;
}

abel_poly truncate_degree(const abel_poly &a, std::size_t d)
{
    abel_poly out(a.get_alphabet());
    for (const auto &[w, c] : a.terms()) {
        if (w.degree() <= d) {
            out.add_term(w, c);
        }
    }
    return out;
}

std::string format_abel(const abel_poly &a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[w, c] : a.terms()) {
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
        if (w.degree() == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str();
        }
        out += '[';
        out += format_word_plain(a.get_alphabet(), w.canonical());
        out += ']';
    }
    return out;
}

} // namespace ncwitt
