#ifndef NCWITT_CD_WITT_HPP
#define NCWITT_CD_WITT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <ncwitt/cycquot.hpp>
#include <ncwitt/freealg.hpp>
#include <ncwitt/witt_ghost.hpp>

namespace ncwitt
{

// Element of the truncated group X_n(A) inside A^{n+1}, i.e. a tuple
// (x_0, ..., x_n) with componentwise ring structure. The context's n counts
// entries, so level() == context().n - 1.
//
// Membership in X_n(A) is not checked; the constructors below from
// Teichmuller lifts and Verschiebung are the intended producers.
class x_vector
{
public:
    x_vector(witt_context ctx, std::vector<free_poly> entries);
    static x_vector zero(const alphabet &a, unsigned p, std::size_t level);

    const witt_context &context() const noexcept
    {
        return m_ctx;
    }
    std::size_t level() const noexcept
    {
        return m_entries.size() - 1;
    }
    std::size_t size() const noexcept
    {
        return m_entries.size();
    }
    const free_poly &operator[](std::size_t i) const
    {
        return m_entries.at(i);
    }
    const std::vector<free_poly> &entries() const noexcept
    {
        return m_entries;
    }
    bool is_zero() const noexcept;

    friend bool operator==(const x_vector &a, const x_vector &b)
    {
        return a.m_ctx == b.m_ctx && a.m_entries == b.m_entries;
    }

    std::string to_string() const;

private:
    witt_context m_ctx;
    std::vector<free_poly> m_entries;
};

// <a> = (a, a^p, ..., a^{p^level}).
x_vector x_teichmuller(const free_poly &a, unsigned p, std::size_t level);
// V(x_0, ..., x_n) = p (0, x_0, ..., x_{n-1}).
x_vector x_verschiebung(const x_vector &x);
x_vector x_add(const x_vector &x, const x_vector &y);
x_vector x_sub(const x_vector &x, const x_vector &y);
x_vector x_mul(const x_vector &x, const x_vector &y);
x_vector x_scale(const x_vector &x, const integer &c);
x_vector x_commutator(const x_vector &x, const x_vector &y);
// Product <a_1> ... <a_s> of Teichmuller lifts.
x_vector x_teichmuller_product(const std::vector<free_poly> &as, unsigned p, std::size_t level);

// Omega(a_0, ..., a_{n-1}) = sum_i V^i <a_i>, whose entries are the
// unabelianized ghost polynomials. The result has as many entries as coords.
x_vector omega_map(const coordinate_tuple &coords, unsigned p);
// Componentwise abelianization X_n(A) -> (A/[A,A])^{n+1}.
ghost_vector x_abelianize(const x_vector &x);

// Parameters of a generator p^m V^n([<a_1>...<a_s>, <b_1^{p^{n-m}}>...<b_t^{p^{n-m}}>])
// of the closed commutator subgroup of X(A).
struct commutator_spec {
    std::size_t m = 0;
    std::size_t n_shift = 0;
    std::vector<free_poly> as;
    std::vector<free_poly> bs;

    std::string to_string() const;
};

x_vector commutator_generator(const commutator_spec &spec, unsigned p, std::size_t level);
// Compares [V^n(prod <a_i>), V^m(prod <b_j>)] with commutator_generator(spec).
bool check_bracket_identity(const commutator_spec &spec, unsigned p, std::size_t level);

// Membership in H = A_4^0 + F^5 A + 2A, where A_4^0 is spanned by the degree-4
// words other than XYXY and YXYX. Defined for the alphabet {X, Y} only.
bool h_membership(const free_poly &f);
// Entry 1 of the generator lies in H (p = 2, alphabet {X, Y}).
bool check_component1_in_H(const commutator_spec &spec);

// Whether `target` lies in the F2 span of `generators` inside the space with
// basis the circular words of degree <= degree_bound. Inputs are reduced mod 2
// and truncated to that degree before elimination.
bool f2_span_membership(const abel_poly &target, const std::vector<abel_poly> &generators, std::size_t degree_bound);

// Classes of w^2 mod 2 for every word w of degree <= 2, truncated at degree 4.
std::vector<abel_poly> xyc_square_classes(const alphabet &a);
// Whether `target` is a sum of such square classes mod 2 in degree <= 4.
bool xyc_target_in_square_span(const abel_poly &target);
// [XXYY] is not congruent to any c^2 mod (2A + [A,A] + F^5A).
bool check_lemma_xyc();

} // namespace ncwitt

#endif
