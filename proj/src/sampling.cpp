#include <ncwitt/sampling.hpp>

namespace ncwitt
{

std::size_t sampler::uniform(std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(m_rng);
}

long sampler::uniform_int(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(m_rng);
}

long sampler::nonzero_int(long bound)
{
    const long v = uniform_int(1, bound);
    return uniform(0, 1) ? v : -v;
}

word sampler::random_word(const alphabet &a, std::size_t min_degree, std::size_t max_degree)
{
    const std::size_t d = uniform(min_degree, max_degree);
    std::vector<letter> letters(d);
    for (auto &l : letters) {
        l = static_cast<letter>(uniform(0, a.size() - 1));
    }
    return word{std::move(letters)};
}

free_poly sampler::random_poly(const alphabet &a, std::size_t max_degree, std::size_t max_terms, long coeff_bound)
{
    free_poly out(a);
    const std::size_t terms = uniform(0, max_terms);
    for (std::size_t i = 0; i < terms; ++i) {
        out.add_term(random_word(a, 0, max_degree), nonzero_int(coeff_bound));
    }
    return out;
}

free_poly sampler::random_nonconstant_poly(const alphabet &a, std::size_t max_degree, std::size_t terms,
                                           long coeff_bound)
{
    for (;;) {
        free_poly out(a);
        for (std::size_t i = 0; i < terms; ++i) {
            out.add_term(random_word(a, 1, max_degree), nonzero_int(coeff_bound));
        }
        if (!out.is_zero()) {
            return out;
        }
    }
}

free_poly sampler::random_bracket_sum(const alphabet &a, std::size_t max_degree, std::size_t max_brackets)
{
    free_poly out(a);
    const std::size_t n = uniform(1, max_brackets);
    for (std::size_t i = 0; i < n; ++i) {
        const free_poly u = free_poly::monomial(a, random_word(a, 1, max_degree));
        const free_poly v = free_poly::monomial(a, random_word(a, 1, max_degree));
        out += integer(nonzero_int(2)) * commutator(u, v);
    }
    return out;
}

coordinate_tuple sampler::random_coords(const alphabet &a, std::size_t n, std::size_t max_degree, std::size_t max_terms)
{
    std::vector<free_poly> coords;
    coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        coords.push_back(random_poly(a, max_degree, max_terms));
    }
    return coordinate_tuple(std::move(coords));
}

} // namespace ncwitt
