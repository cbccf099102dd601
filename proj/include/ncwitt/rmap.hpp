#ifndef NCWITT_RMAP_HPP
#define NCWITT_RMAP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <ncwitt/cd_witt.hpp>
#include <ncwitt/cycquot.hpp>
#include <ncwitt/freealg.hpp>
#include <ncwitt/witt_ghost.hpp>

namespace ncwitt
{

// One division step of the recursion for r_i (i >= 1).
struct r_audit_step {
    std::size_t index;
    integer divisor;  // p^i
    abel_poly numerator; // omega_i(r_0..r_{i-1},0) - phi(omega_{i-1}(r_0..r_{i-1})) in A/[A,A]
    abel_poly quotient;
};

struct r_result {
    witt_context context;
    coordinate_tuple coords;
    std::vector<r_audit_step> audit;
};

struct r_map_options {
    // Upper bound on the degree of any ghost polynomial formed during the
    // recursion; exceeding it raises degree_cap_exceeded.
    std::size_t degree_cap = 64;
};

// Hesselholt's R-map on a tuple of commutators, truncated to ctx.n entries:
//   r_0 = eps_0,
//   r_i = eps_i - sigma0(p^{-i}(omega_i(r_0..r_{i-1},0) - phi(omega_{i-1}(r_0..r_{i-1})))).
// Throws epsilon_not_commutator, not_divisible, degree_cap_exceeded.
r_result r_map(const coordinate_tuple &eps, const witt_context &ctx, const r_map_options &opts = {});

bool check_ghost_vanishes(const r_result &r);
bool check_ghost_vanishes(const witt_context &ctx, const coordinate_tuple &coords);

// abelianize(x^{p^k} - phi(x^{p^{k-1}})) is divisible by p^k, and phi([x, g])
// is a commutator for every generator g.
bool check_lemma_phi(const free_poly &x, std::size_t k, unsigned p);
// phi([f, g]) lies in [A,A].
bool check_phi_preserves_commutators(const free_poly &f, const free_poly &g, unsigned p);

struct report_step {
    std::string name;
    std::string input;
    std::string output;
    bool passed = true;
};

struct report {
    std::vector<report_step> steps;
    bool passed = true;

    std::string to_string() const;
};

// Replays the non-injectivity argument with r = R(XY - YX, 0, ..., 0) at
// p = 2 over {X, Y}: the ghost of r vanishes, omega_1(r) has the expected
// value, and omega_1(r) is not in H. Needs n >= 2.
report counterexample_report(std::size_t n, const r_map_options &opts = {});
// Same checks on an arbitrary coordinate tuple standing in for r.
report counterexample_report_for(const coordinate_tuple &r);

// The published value of omega_1(R(XY - YX, 0, ...)).
free_poly expected_counterexample_omega1();

} // namespace ncwitt

#endif
