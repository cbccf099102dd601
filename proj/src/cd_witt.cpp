#include <ncwitt/cd_witt.hpp>

#include <map>
#include <stdexcept>

#include <ncwitt/errors.hpp>
#include <ncwitt/f2.hpp>

namespace ncwitt
{

x_vector::x_vector(witt_context ctx, std::vector<free_poly> entries) : m_ctx(std::move(ctx)), m_entries(std::move(entries))
{
    if (m_entries.size() != m_ctx.n) {
        throw context_mismatch("x-vector has " + std::to_string(m_entries.size()) + " entries, context expects "
                               + std::to_string(m_ctx.n));
    }
    for (const auto &e : m_entries) {
        require_same_alphabet(m_ctx.alpha, e.get_alphabet());
    }
}

x_vector x_vector::zero(const alphabet &a, unsigned p, std::size_t level)
{
    return x_vector(witt_context(a, p, level + 1), std::vector<free_poly>(level + 1, free_poly(a)));
}

bool x_vector::is_zero() const noexcept
{
    for (const auto &e : m_entries) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

std::string x_vector::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < m_entries.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_poly(m_entries[i]);
    }
    out += ')';
    return out;
}

namespace
{

void require_compatible(const x_vector &x, const x_vector &y)
{
    if (!(x.context() == y.context())) {
        throw context_mismatch("x-vectors over different contexts");
    }
}

template <typename Op>
x_vector componentwise(const x_vector &x, const x_vector &y, Op op)
{
    require_compatible(x, y);
    std::vector<free_poly> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(op(x[i], y[i]));
    }
    return x_vector(x.context(), std::move(out));
}

integer ipow(unsigned p, std::size_t k)
{
    integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, k);
    return out;
}

bool is_xy_alphabet(const alphabet &a)
{
    return a.size() == 2 && a.index_of("X") && a.index_of("Y");
}

void require_xy(const alphabet &a)
{
    if (!is_xy_alphabet(a)) {
        throw unsupported_setting("H-membership is defined only for the alphabet {X, Y}");
    }
}

} // namespace

x_vector x_teichmuller(const free_poly &a, unsigned p, std::size_t level)
{
    witt_context ctx(a.get_alphabet(), p, level + 1);
    std::vector<free_poly> out;
    out.reserve(level + 1);
    out.push_back(a);
    for (std::size_t i = 1; i <= level; ++i) {
        out.push_back(poly_pow(out.back(), p));
    }
    return x_vector(std::move(ctx), std::move(out));
}

x_vector x_verschiebung(const x_vector &x)
{
    const integer p = x.context().p;
    std::vector<free_poly> out;
    out.reserve(x.size());
    out.emplace_back(x.context().alpha);
    for (std::size_t i = 1; i < x.size(); ++i) {
        out.push_back(p * x[i - 1]);
    }
    return x_vector(x.context(), std::move(out));
}

x_vector x_add(const x_vector &x, const x_vector &y)
{
    return componentwise(x, y, [](const free_poly &a, const free_poly &b) { return a + b; });
}

x_vector x_sub(const x_vector &x, const x_vector &y)
{
    return componentwise(x, y, [](const free_poly &a, const free_poly &b) { return a - b; });
}

x_vector x_mul(const x_vector &x, const x_vector &y)
{
    return componentwise(x, y, [](const free_poly &a, const free_poly &b) { return a * b; });
}

x_vector x_scale(const x_vector &x, const integer &c)
{
    std::vector<free_poly> out;
    out.reserve(x.size());
    for (const auto &e : x.entries()) {
        out.push_back(c * e);
    }
    return x_vector(x.context(), std::move(out));
}

x_vector x_commutator(const x_vector &x, const x_vector &y)
{
    return componentwise(x, y, [](const free_poly &a, const free_poly &b) { return commutator(a, b); });
}

x_vector x_teichmuller_product(const std::vector<free_poly> &as, unsigned p, std::size_t level)
{
    if (as.empty()) {
        throw std::invalid_argument("product of Teichmuller lifts needs at least one factor");
    }
    x_vector out = x_teichmuller(as.front(), p, level);
    for (std::size_t i = 1; i < as.size(); ++i) {
        out = x_mul(out, x_teichmuller(as[i], p, level));
    }
    return out;
}

x_vector omega_map(const coordinate_tuple &coords, unsigned p)
{
    witt_context ctx(coords.get_alphabet(), p, coords.size());
    return x_vector(std::move(ctx), witt_polynomials(coords, p));
}

ghost_vector x_abelianize(const x_vector &x)
{
    std::vector<abel_poly> out;
    out.reserve(x.size());
    for (const auto &e : x.entries()) {
        out.push_back(abelianize(e));
    }
    return ghost_vector(x.context(), std::move(out));
}

std::string commutator_spec::to_string() const
{
    auto list = [](const std::vector<free_poly> &v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) {
                s += ", ";
            }
            s += format_poly(v[i]);
        }
        return s + "]";
    };
    return "m=" + std::to_string(m) + " n=" + std::to_string(n_shift) + " as=" + list(as) + " bs=" + list(bs);
}

namespace
{

void validate_spec(const commutator_spec &spec)
{
    if (spec.m > spec.n_shift) {
        throw std::invalid_argument("commutator generator requires m <= n (got m=" + std::to_string(spec.m)
                                    + ", n=" + std::to_string(spec.n_shift) + ")");
    }
    if (spec.as.empty() || spec.bs.empty()) {
        throw std::invalid_argument("commutator generator needs non-empty factor lists");
    }
}

x_vector iterate_verschiebung(x_vector x, std::size_t times)
{
    for (std::size_t i = 0; i < times; ++i) {
        x = x_verschiebung(x);
    }
    return x;
}

// V^times applied to a vector known only up to entry level - times, placed in
// a vector of the given level. Entries pushed past the top are never formed.
x_vector shifted_into(const x_vector &inner, std::size_t times, std::size_t level)
{
    const alphabet &a = inner.context().alpha;
    const unsigned p = inner.context().p;
    std::vector<free_poly> out(level + 1, free_poly(a));
    const integer scale = ipow(p, times);
    for (std::size_t i = times; i <= level; ++i) {
        out[i] = scale * inner[i - times];
    }
    return x_vector(witt_context(a, p, level + 1), std::move(out));
}

// V^times(prod <f_i>) at the given level via x_verschiebung. The product is
// formed only up to entry level - times and zero-padded above; the padding is
// shifted out before it can be observed.
x_vector shifted_product(const std::vector<free_poly> &fs, unsigned p, std::size_t times, std::size_t level)
{
    if (times > level) {
        return x_vector::zero(fs.front().get_alphabet(), p, level);
    }
    const x_vector low = x_teichmuller_product(fs, p, level - times);
    std::vector<free_poly> padded = low.entries();
    padded.resize(level + 1, free_poly(low.context().alpha));
    return iterate_verschiebung(x_vector(witt_context(low.context().alpha, p, level + 1), std::move(padded)), times);
}

} // namespace

x_vector commutator_generator(const commutator_spec &spec, unsigned p, std::size_t level)
{
    validate_spec(spec);
    std::vector<free_poly> lifted_bs;
    lifted_bs.reserve(spec.bs.size());
    for (const auto &b : spec.bs) {
        lifted_bs.push_back(poly_pow_prime_power(b, p, spec.n_shift - spec.m));
    }
    if (spec.n_shift > level) {
        return x_vector::zero(spec.as.front().get_alphabet(), p, level);
    }
    const std::size_t inner_level = level - spec.n_shift;
    const x_vector lhs = x_teichmuller_product(spec.as, p, inner_level);
    const x_vector rhs = x_teichmuller_product(lifted_bs, p, inner_level);
    return x_scale(shifted_into(x_commutator(lhs, rhs), spec.n_shift, level), ipow(p, spec.m));
}

bool check_bracket_identity(const commutator_spec &spec, unsigned p, std::size_t level)
{
    validate_spec(spec);
    const x_vector va = shifted_product(spec.as, p, spec.n_shift, level);
    const x_vector vb = shifted_product(spec.bs, p, spec.m, level);
    return x_commutator(va, vb) == commutator_generator(spec, p, level);
}

bool h_membership(const free_poly &f)
{
    const alphabet &a = f.get_alphabet();
    require_xy(a);
    const letter x = static_cast<letter>(*a.index_of("X"));
    const letter y = static_cast<letter>(*a.index_of("Y"));
    const word xyxy{x, y, x, y};
    const word yxyx{y, x, y, x};
    const free_poly reduced = reduce_mod(f, 2);
    for (const auto &[w, c] : reduced.terms()) {
        if (w.degree() <= 3) {
            return false;
        }
        if (w.degree() == 4 && (w == xyxy || w == yxyx)) {
            return false;
        }
    }
    return true;
}

bool check_component1_in_H(const commutator_spec &spec)
{
    validate_spec(spec);
    require_xy(spec.as.front().get_alphabet());
    return h_membership(commutator_generator(spec, 2, 1)[1]);
}

bool f2_span_membership(const abel_poly &target, const std::vector<abel_poly> &generators, std::size_t degree_bound)
{
    const integer two = 2;
    auto prepare = [&](const abel_poly &v) { return truncate_degree(reduce_mod(v, two), degree_bound); };

    const abel_poly t = prepare(target);
    std::vector<abel_poly> gens;
    gens.reserve(generators.size());
    for (const auto &g : generators) {
        require_same_alphabet(target.get_alphabet(), g.get_alphabet());
        gens.push_back(prepare(g));
    }

    // Column index for every class that occurs.
    std::map<circular_word, std::size_t> columns;
    auto index = [&](const abel_poly &v) {
        for (const auto &[w, c] : v.terms()) {
            columns.try_emplace(w, columns.size());
        }
    };
    index(t);
    for (const auto &g : gens) {
        index(g);
    }
    auto to_row = [&](const abel_poly &v) {
        f2::bit_row row(columns.size());
        for (const auto &[w, c] : v.terms()) {
            row.set(columns.at(w));
        }
        return row;
    };

    f2::row_space span(columns.size());
    for (const auto &g : gens) {
        span.insert(to_row(g));
    }
    return span.contains(to_row(t));
}

std::vector<abel_poly> xyc_square_classes(const alphabet &a)
{
    std::vector<word> words{word{}};
    for (letter i = 0; i < a.size(); ++i) {
        words.push_back(word{i});
    }
    for (letter i = 0; i < a.size(); ++i) {
        for (letter j = 0; j < a.size(); ++j) {
            words.push_back(word{i, j});
        }
    }
    std::vector<abel_poly> out;
    out.reserve(words.size());
    for (const auto &w : words) {
        const free_poly sq = free_poly::monomial(a, w.power(2));
        out.push_back(truncate_degree(reduce_mod(abelianize(sq), 2), 4));
    }
    return out;
}

bool xyc_target_in_square_span(const abel_poly &target)
{
    return f2_span_membership(target, xyc_square_classes(target.get_alphabet()), 4);
}

bool check_lemma_xyc()
{
    const alphabet a = alphabet::xy();
    const abel_poly target = abelianize(free_poly::monomial(a, word{0, 0, 1, 1}));
    return !xyc_target_in_square_span(target);
}

} // namespace ncwitt
