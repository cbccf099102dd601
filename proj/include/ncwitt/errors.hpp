#ifndef NCWITT_ERRORS_HPP
#define NCWITT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncwitt
{

// Base class for every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class alphabet_mismatch : public error
{
public:
    alphabet_mismatch() : error("operands belong to different alphabets") {}
};

class context_mismatch : public error
{
public:
    explicit context_mismatch(const std::string &what) : error("context mismatch: " + what) {}
};

// Raised by exact division in A/[A,A] when some coefficient is not a multiple
// of the divisor. Inside the R-map this is an internal-consistency failure.
class not_divisible : public error
{
public:
    using error::error;
};

class epsilon_not_commutator : public error
{
public:
    epsilon_not_commutator(std::size_t index, const std::string &value)
        : error("epsilon_" + std::to_string(index) + " = " + value + " is not in [A,A]"), m_index(index)
    {
    }
    std::size_t index() const noexcept
    {
        return m_index;
    }

private:
    std::size_t m_index;
};

class degree_cap_exceeded : public error
{
public:
    using error::error;
};

// The requested operation is only defined for a specific alphabet or prime.
class unsupported_setting : public error
{
public:
    using error::error;
};

class syntax_error : public error
{
public:
    syntax_error(const std::string &msg, std::size_t pos)
        : error("syntax error at position " + std::to_string(pos) + ": " + msg), m_pos(pos)
    {
    }
    std::size_t position() const noexcept
    {
        return m_pos;
    }

private:
    std::size_t m_pos;
};

class unknown_generator : public error
{
public:
    unknown_generator(const std::string &symbol, std::size_t pos)
        : error("unknown generator '" + symbol + "' at position " + std::to_string(pos)), m_symbol(symbol)
    {
    }
    const std::string &symbol() const noexcept
    {
        return m_symbol;
    }

private:
    std::string m_symbol;
};

} // namespace ncwitt

#endif
