#ifndef NCWITT_F2_HPP
#define NCWITT_F2_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ncwitt::f2
{

// Dense bit vector over F2.
class bit_row
{
public:
    explicit bit_row(std::size_t ncols = 0) : m_ncols(ncols), m_blocks((ncols + 63) / 64, 0) {}

    std::size_t size() const noexcept
    {
        return m_ncols;
    }
    bool get(std::size_t i) const noexcept
    {
        return (m_blocks[i / 64] >> (i % 64)) & 1u;
    }
    void set(std::size_t i, bool v = true) noexcept
    {
        const std::uint64_t mask = std::uint64_t(1) << (i % 64);
        if (v) {
            m_blocks[i / 64] |= mask;
        } else {
            m_blocks[i / 64] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept
    {
        m_blocks[i / 64] ^= std::uint64_t(1) << (i % 64);
    }
    bit_row &operator^=(const bit_row &other) noexcept;
    bool any() const noexcept;
    // Index of the lowest set bit, or size() when the row is zero.
    std::size_t first_set() const noexcept;

    friend bool operator==(const bit_row &, const bit_row &) = default;

private:
    std::size_t m_ncols;
    std::vector<std::uint64_t> m_blocks;
};

// Row space of a set of vectors, kept in reduced echelon form.
class row_space
{
public:
    explicit row_space(std::size_t ncols) : m_ncols(ncols) {}

    // Reduces v against the basis; the result is zero iff v is in the span.
    bit_row reduce(bit_row v) const;
    // Adds v to the span. Returns false when v was already dependent.
    bool insert(const bit_row &v);
    bool contains(const bit_row &v) const
    {
        return !reduce(v).any();
    }
    std::size_t rank() const noexcept
    {
        return m_basis.size();
    }

private:
    std::size_t m_ncols;
    // Each basis row has a distinct pivot (its lowest set bit), and no other
    // basis row has that pivot bit set.
    std::vector<bit_row> m_basis;
    std::vector<std::size_t> m_pivots;
};

} // namespace ncwitt::f2

#endif
