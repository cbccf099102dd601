#include <ncwitt/f2.hpp>

#include <bit>
#include <stdexcept>

namespace ncwitt::f2
{

bit_row &bit_row::operator^=(const bit_row &other) noexcept
{
    for (std::size_t i = 0; i < m_blocks.size(); ++i) {
        m_blocks[i] ^= other.m_blocks[i];
    }
    return *this;
}

bool bit_row::any() const noexcept
{
    for (auto b : m_blocks) {
        if (b != 0) {
            return true;
        }
    }
    return false;
}

std::size_t bit_row::first_set() const noexcept
{
    for (std::size_t i = 0; i < m_blocks.size(); ++i) {
        if (m_blocks[i] != 0) {
            return i * 64 + static_cast<std::size_t>(std::countr_zero(m_blocks[i]));
        }
    }
    return m_ncols;
}

bit_row row_space::reduce(bit_row v) const
{
    if (v.size() != m_ncols) {
        throw std::invalid_argument("row width does not match the row space");
    }
    for (std::size_t i = 0; i < m_basis.size(); ++i) {
        if (v.get(m_pivots[i])) {
            v ^= m_basis[i];
        }
    }
    return v;
}

bool row_space::insert(const bit_row &v)
{
    bit_row r = reduce(v);
    if (!r.any()) {
        return false;
    }
    const std::size_t pivot = r.first_set();
    // Keep the basis fully reduced on pivot columns.
    for (auto &b : m_basis) {
        if (b.get(pivot)) {
            b ^= r;
        }
    }
    m_basis.push_back(std::move(r));
    m_pivots.push_back(pivot);
    return true;
}

} // namespace ncwitt::f2
