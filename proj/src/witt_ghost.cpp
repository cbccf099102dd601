#include <ncwitt/witt_ghost.hpp>

#include <stdexcept>

#include <ncwitt/errors.hpp>

namespace ncwitt
{

bool is_prime(unsigned p) noexcept
{
    if (p < 2) {
        return false;
    }
    for (unsigned d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

witt_context::witt_context(alphabet a, unsigned p_, std::size_t n_) : alpha(std::move(a)), p(p_), n(n_)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("p = " + std::to_string(p) + " is not a prime");
    }
    if (n < 1) {
        throw std::invalid_argument("truncation length must be at least 1");
    }
}

coordinate_tuple::coordinate_tuple(std::vector<free_poly> coords) : m_coords(std::move(coords))
{
    if (m_coords.empty()) {
        throw std::invalid_argument("coordinate tuple must be non-empty");
    }
    for (const auto &c : m_coords) {
        require_same_alphabet(m_coords.front().get_alphabet(), c.get_alphabet());
    }
}

coordinate_tuple::coordinate_tuple(const alphabet &a, std::size_t n)
    : coordinate_tuple(std::vector<free_poly>(n, free_poly(a)))
{
}

ghost_vector::ghost_vector(witt_context ctx, std::vector<abel_poly> components)
    : m_ctx(std::move(ctx)), m_components(std::move(components))
{
    if (m_components.size() != m_ctx.n) {
        throw context_mismatch("ghost vector has " + std::to_string(m_components.size()) + " components, context expects "
                               + std::to_string(m_ctx.n));
    }
    for (const auto &c : m_components) {
        require_same_alphabet(m_ctx.alpha, c.get_alphabet());
    }
}

ghost_vector ghost_vector::zero(const witt_context &ctx)
{
    return ghost_vector(ctx, std::vector<abel_poly>(ctx.n, abel_poly(ctx.alpha)));
}

bool ghost_vector::is_zero() const noexcept
{
    for (const auto &c : m_components) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

std::string ghost_vector::to_string() const
{
    return format_ghost(*this);
}

namespace
{

integer ipow(unsigned p, std::size_t k)
{
    integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, k);
    return out;
}

void require_compatible(const ghost_vector &u, const ghost_vector &v)
{
    if (!(u.context() == v.context())) {
        throw context_mismatch("ghost vectors over different contexts");
    }
}

void require_coords(const witt_context &ctx, const coordinate_tuple &coords)
{
    require_same_alphabet(ctx.alpha, coords.get_alphabet());
    if (coords.size() != ctx.n) {
        throw context_mismatch("expected " + std::to_string(ctx.n) + " coordinates, got "
                               + std::to_string(coords.size()));
    }
}

} // namespace

free_poly witt_polynomial(std::size_t i, const coordinate_tuple &coords, unsigned p)
{
    if (i >= coords.size()) {
        throw std::out_of_range("ghost polynomial index " + std::to_string(i) + " out of range for "
                                + std::to_string(coords.size()) + " coordinates");
    }
    free_poly out(coords.get_alphabet());
    for (std::size_t k = 0; k <= i; ++k) {
        if (coords[k].is_zero()) {
            continue;
        }
        out += ipow(p, k) * poly_pow_prime_power(coords[k], p, i - k);
    }
    return out;
}

std::vector<free_poly> witt_polynomials(const coordinate_tuple &coords, unsigned p)
{
    const std::size_t n = coords.size();
    std::vector<free_poly> out(n, free_poly(coords.get_alphabet()));
    for (std::size_t k = 0; k < n; ++k) {
        if (coords[k].is_zero()) {
            continue;
        }
        // a_k^{p^{i-k}} contributes p^k a_k^{p^{i-k}} to omega_i.
        const integer scale = ipow(p, k);
        free_poly power = coords[k];
        for (std::size_t i = k; i < n; ++i) {
            if (i > k) {
                power = poly_pow(power, p);
            }
            out[i] += scale * power;
        }
    }
    return out;
}

ghost_vector ghost_map(const witt_context &ctx, const coordinate_tuple &coords)
{
    require_coords(ctx, coords);
    std::vector<abel_poly> comps;
    comps.reserve(ctx.n);
    for (const auto &w : witt_polynomials(coords, ctx.p)) {
        comps.push_back(abelianize(w));
    }
    return ghost_vector(ctx, std::move(comps));
}

ghost_vector w_from_coordinates(const witt_context &ctx, const coordinate_tuple &coords)
{
    return ghost_map(ctx, coords);
}

ghost_vector w_add(const ghost_vector &u, const ghost_vector &v)
{
    require_compatible(u, v);
    std::vector<abel_poly> comps;
    comps.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        comps.push_back(u[i] + v[i]);
    }
    return ghost_vector(u.context(), std::move(comps));
}

ghost_vector w_sub(const ghost_vector &u, const ghost_vector &v)
{
    require_compatible(u, v);
    std::vector<abel_poly> comps;
    comps.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        comps.push_back(u[i] - v[i]);
    }
    return ghost_vector(u.context(), std::move(comps));
}

ghost_vector w_verschiebung(const ghost_vector &u)
{
    const auto &ctx = u.context();
    std::vector<abel_poly> comps;
    comps.reserve(ctx.n);
    comps.emplace_back(ctx.alpha);
    for (std::size_t i = 1; i < ctx.n; ++i) {
        comps.push_back(integer(ctx.p) * u[i - 1]);
    }
    return ghost_vector(ctx, std::move(comps));
}

ghost_vector w_teichmuller(const witt_context &ctx, const free_poly &a)
{
    require_same_alphabet(ctx.alpha, a.get_alphabet());
    std::vector<abel_poly> comps;
    comps.reserve(ctx.n);
    free_poly power = a;
    for (std::size_t i = 0; i < ctx.n; ++i) {
        if (i > 0) {
            power = poly_pow(power, ctx.p);
        }
        comps.push_back(abelianize(power));
    }
    return ghost_vector(ctx, std::move(comps));
}

bool w_equal(const ghost_vector &u, const ghost_vector &v)
{
    require_compatible(u, v);
    return u.components() == v.components();
}

bool check_wagen_decomposition(const witt_context &ctx, const coordinate_tuple &coords)
{
    require_coords(ctx, coords);
    ghost_vector sum = ghost_vector::zero(ctx);
    for (std::size_t i = 0; i < ctx.n; ++i) {
        ghost_vector term = w_teichmuller(ctx, coords[i]);
        for (std::size_t k = 0; k < i; ++k) {
            term = w_verschiebung(term);
        }
        sum = w_add(sum, term);
    }
    return w_equal(ghost_map(ctx, coords), sum);
}

std::string format_ghost(const ghost_vector &g)
{
    std::string out = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_abel(g[i]);
    }
    out += ')';
    return out;
}

} // namespace ncwitt
