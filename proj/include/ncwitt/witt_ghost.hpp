#ifndef NCWITT_WITT_GHOST_HPP
#define NCWITT_WITT_GHOST_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <ncwitt/cycquot.hpp>
#include <ncwitt/freealg.hpp>

namespace ncwitt
{

bool is_prime(unsigned p) noexcept;

// The prime p, the alphabet, and the number n of components carried by
// truncated vectors.
struct witt_context {
    witt_context(alphabet a, unsigned p, std::size_t n);

    alphabet alpha;
    unsigned p;
    std::size_t n;

    friend bool operator==(const witt_context &, const witt_context &) = default;
};

// Witt coordinates (a_0, ..., a_{n-1}) over a shared alphabet.
class coordinate_tuple
{
public:
    explicit coordinate_tuple(std::vector<free_poly> coords);
    coordinate_tuple(std::initializer_list<free_poly> coords) : coordinate_tuple(std::vector<free_poly>(coords)) {}
    // n zero coordinates.
    coordinate_tuple(const alphabet &a, std::size_t n);

    std::size_t size() const noexcept
    {
        return m_coords.size();
    }
    const free_poly &operator[](std::size_t i) const
    {
        return m_coords.at(i);
    }
    const std::vector<free_poly> &coords() const noexcept
    {
        return m_coords;
    }
    const alphabet &get_alphabet() const noexcept
    {
        return m_coords.front().get_alphabet();
    }

    friend bool operator==(const coordinate_tuple &, const coordinate_tuple &) = default;

private:
    std::vector<free_poly> m_coords;
};

// Truncated element of W_n(A), stored through its ghost components in
// A/[A,A]. For free algebras A/[A,A] is torsion free, so the ghost map is
// injective and ghost equality is equality in W_n(A).
class ghost_vector
{
public:
    ghost_vector(witt_context ctx, std::vector<abel_poly> components);
    static ghost_vector zero(const witt_context &ctx);

    const witt_context &context() const noexcept
    {
        return m_ctx;
    }
    std::size_t size() const noexcept
    {
        return m_components.size();
    }
    const abel_poly &operator[](std::size_t i) const
    {
        return m_components.at(i);
    }
    const std::vector<abel_poly> &components() const noexcept
    {
        return m_components;
    }
    bool is_zero() const noexcept;

    std::string to_string() const;

private:
    witt_context m_ctx;
    std::vector<abel_poly> m_components;
};

// omega_i(a_0, ..., a_i) = a_0^{p^i} + p a_1^{p^{i-1}} + ... + p^i a_i in A,
// before abelianization. Needs i < coords.size().
free_poly witt_polynomial(std::size_t i, const coordinate_tuple &coords, unsigned p);

// All ghost polynomials omega_0..omega_{n-1} of the tuple, unabelianized.
// Shares the iterated powers a_k^{p^j} between components.
std::vector<free_poly> witt_polynomials(const coordinate_tuple &coords, unsigned p);

ghost_vector ghost_map(const witt_context &ctx, const coordinate_tuple &coords);
// The class q_n(coords) in W_n(A), which lives as its ghost vector.
ghost_vector w_from_coordinates(const witt_context &ctx, const coordinate_tuple &coords);

ghost_vector w_add(const ghost_vector &u, const ghost_vector &v);
ghost_vector w_sub(const ghost_vector &u, const ghost_vector &v);
// (g_0, ..., g_{n-1}) -> (0, p g_0, ..., p g_{n-2}).
ghost_vector w_verschiebung(const ghost_vector &u);
// Ghost of (a, 0, ..., 0): (a, a^p, ..., a^{p^{n-1}}) abelianized.
ghost_vector w_teichmuller(const witt_context &ctx, const free_poly &a);
bool w_equal(const ghost_vector &u, const ghost_vector &v);

// Compares ghost_map(coords) against sum_i V^i <a_i>.
bool check_wagen_decomposition(const witt_context &ctx, const coordinate_tuple &coords);

std::string format_ghost(const ghost_vector &g);

} // namespace ncwitt

#endif
