#include <ncwitt/rmap.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <ncwitt/errors.hpp>

namespace ncwitt
{

namespace
{

integer ipow(unsigned p, std::size_t k)
{
    integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, k);
    return out;
}

std::string format_tuple(const coordinate_tuple &t)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_poly(t[i]);
    }
    return out + ")";
}

// Degree of omega_i(r_0, ..., r_{i-1}, 0) predicted from the degrees of r_k.
std::size_t predicted_ghost_degree(const std::vector<free_poly> &r, unsigned p, std::size_t i)
{
    std::size_t out = 0;
    for (std::size_t k = 0; k < r.size() && k < i; ++k) {
        const degree_t d = r[k].degree();
        if (d.is_minus_infinity()) {
            continue;
        }
        std::size_t scale = 1;
        for (std::size_t j = k; j < i; ++j) {
            scale *= p;
        }
        out = std::max(out, d.value() * scale);
    }
    return out;
}

} // namespace

r_result r_map(const coordinate_tuple &eps, const witt_context &ctx, const r_map_options &opts)
{
    require_same_alphabet(ctx.alpha, eps.get_alphabet());
    if (eps.size() != ctx.n) {
        throw context_mismatch("expected " + std::to_string(ctx.n) + " epsilons, got " + std::to_string(eps.size()));
    }
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!in_commutator_subgroup(eps[i])) {
            throw epsilon_not_commutator(i, format_poly(eps[i]));
        }
    }

    std::vector<free_poly> r{eps[0]};
    std::vector<r_audit_step> audit;
    for (std::size_t i = 1; i < ctx.n; ++i) {
        const std::size_t predicted = predicted_ghost_degree(r, ctx.p, i);
        if (predicted > opts.degree_cap) {
            throw degree_cap_exceeded("r_" + std::to_string(i) + " needs ghost polynomials of degree "
                                      + std::to_string(predicted) + ", above the cap of "
                                      + std::to_string(opts.degree_cap));
        }
        std::vector<free_poly> padded = r;
        padded.emplace_back(ctx.alpha);
        // ghosts[i-1] = omega_{i-1}(r_0..r_{i-1}); ghosts[i] = omega_i(r_0..r_{i-1}, 0).
        const auto ghosts = witt_polynomials(coordinate_tuple(std::move(padded)), ctx.p);
        abel_poly numerator = abelianize(ghosts[i]) - abelianize(phi_map(ghosts[i - 1], ctx.p));
        const integer divisor = ipow(ctx.p, i);
        abel_poly quotient(ctx.alpha);
        try {
            quotient = divide_exact(numerator, divisor);
        } catch (const not_divisible &e) {
            throw not_divisible("R-map step " + std::to_string(i) + ": " + e.what());
        }
        r.push_back(eps[i] - sigma0(quotient));
        audit.push_back(r_audit_step{i, divisor, std::move(numerator), std::move(quotient)});
    }
    return r_result{ctx, coordinate_tuple(std::move(r)), std::move(audit)};
}

bool check_ghost_vanishes(const witt_context &ctx, const coordinate_tuple &coords)
{
    return ghost_map(ctx, coords).is_zero();
}

bool check_ghost_vanishes(const r_result &r)
{
    return check_ghost_vanishes(r.context, r.coords);
}

bool check_phi_preserves_commutators(const free_poly &f, const free_poly &g, unsigned p)
{
    return in_commutator_subgroup(phi_map(commutator(f, g), p));
}

bool check_lemma_phi(const free_poly &x, std::size_t k, unsigned p)
{
    if (k < 1) {
        throw std::invalid_argument("check_lemma_phi requires k >= 1");
    }
    const free_poly lower = poly_pow_prime_power(x, p, k - 1);
    const free_poly upper = poly_pow(lower, p);
    if (!divisible_by(abelianize(upper - phi_map(lower, p)), ipow(p, k))) {
        return false;
    }
    const alphabet &a = x.get_alphabet();
    for (std::size_t g = 0; g < a.size(); ++g) {
        if (!check_phi_preserves_commutators(x, free_poly::monomial(a, word{static_cast<letter>(g)}), p)) {
            return false;
        }
    }
    return true;
}

std::string report::to_string() const
{
    std::string out;
    for (const auto &s : steps) {
        out += (s.passed ? "[PASS] " : "[FAIL] ") + s.name + "\n";
        out += "  input:  " + s.input + "\n";
        out += "  output: " + s.output + "\n";
    }
    out += passed ? "PASS\n" : "FAILED\n";
    return out;
}

free_poly expected_counterexample_omega1()
{
    const alphabet a = alphabet::xy();
    const letter x = 0, y = 1;
    free_poly f(a);
    f.add_term(word{x, y, x, y}, -1);
    f.add_term(word{y, x, y, x}, 1);
    f.add_term(word{x, y, y, x}, -1);
    f.add_term(word{y, x, x, y}, -1);
    f.add_term(word{x, x, y, y}, 2);
    return f;
}

report counterexample_report_for(const coordinate_tuple &r)
{
    if (r.size() < 2) {
        throw std::invalid_argument("counterexample needs at least two coordinates");
    }
    if (!(r.get_alphabet() == alphabet::xy())) {
        throw unsupported_setting("counterexample is defined over the alphabet X < Y");
    }
    const witt_context ctx(alphabet::xy(), 2, r.size());
    report rep;
    auto add = [&rep](report_step step) {
        rep.passed = rep.passed && step.passed;
        rep.steps.push_back(std::move(step));
    };

    const std::string r_text = format_tuple(r);
    const ghost_vector ghost = ghost_map(ctx, r);
    add({"ghost_vanishes", r_text, format_ghost(ghost), ghost.is_zero()});

    const x_vector omega = omega_map(r, ctx.p);
    const free_poly &omega1 = omega[1];
    const free_poly expected = expected_counterexample_omega1();
    add({"omega_1", r_text, format_poly(omega1), omega1 == expected});

    const bool in_h = h_membership(omega1);
    add({"omega_1_not_in_H", format_poly(omega1), in_h ? "in H" : "not in H", !in_h});
    return rep;
}

report counterexample_report(std::size_t n, const r_map_options &opts)
{
    if (n < 2) {
        throw std::invalid_argument("counterexample needs level n >= 2");
    }
    const alphabet a = alphabet::xy();
    const witt_context ctx(a, 2, n);
    std::vector<free_poly> eps(n, free_poly(a));
    eps[0] = commutator(free_poly::generator(a, "X"), free_poly::generator(a, "Y"));
    const coordinate_tuple eps_tuple(std::move(eps));

    report rep;
    std::optional<r_result> r;
    try {
        r = r_map(eps_tuple, ctx, opts);
    } catch (const error &e) {
        rep.steps.push_back({"r_map", format_tuple(eps_tuple), e.what(), false});
        rep.passed = false;
        return rep;
    }
    rep.steps.push_back({"r_map", format_tuple(eps_tuple), format_tuple(r->coords), true});

    report tail = counterexample_report_for(r->coords);
    rep.passed = tail.passed;
    for (auto &s : tail.steps) {
        rep.steps.push_back(std::move(s));
    }
    return rep;
}

} // namespace ncwitt
