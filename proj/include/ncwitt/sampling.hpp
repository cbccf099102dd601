#ifndef NCWITT_SAMPLING_HPP
#define NCWITT_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <ncwitt/cd_witt.hpp>
#include <ncwitt/freealg.hpp>
#include <ncwitt/witt_ghost.hpp>

namespace ncwitt
{

inline constexpr std::uint64_t default_seed = 20240917;

// Seeded source of random words, polynomials and generator parameters for
// the property sweeps.
class sampler
{
public:
    explicit sampler(std::uint64_t seed = default_seed) : m_rng(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi);
    long uniform_int(long lo, long hi);
    // Nonzero integer in [-bound, bound].
    long nonzero_int(long bound);

    word random_word(const alphabet &a, std::size_t min_degree, std::size_t max_degree);
    // Sum of up to max_terms words of degree <= max_degree with nonzero
    // coefficients in [-coeff_bound, coeff_bound]. May cancel to zero.
    free_poly random_poly(const alphabet &a, std::size_t max_degree, std::size_t max_terms, long coeff_bound = 3);
    // As random_poly with exactly `terms` summands, none of them constant.
    free_poly random_nonconstant_poly(const alphabet &a, std::size_t max_degree, std::size_t terms, long coeff_bound = 3);
    // Sum of 1..max_brackets terms c[u, v] with u, v words of degree <= max_degree.
    free_poly random_bracket_sum(const alphabet &a, std::size_t max_degree, std::size_t max_brackets);
    coordinate_tuple random_coords(const alphabet &a, std::size_t n, std::size_t max_degree, std::size_t max_terms);

    std::mt19937_64 &engine() noexcept
    {
        return m_rng;
    }

private:
    std::mt19937_64 m_rng;
};

} // namespace ncwitt

#endif
