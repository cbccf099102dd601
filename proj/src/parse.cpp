#include <ncwitt/parse.hpp>

#include <cctype>
#include <limits>
#include <stdexcept>
#include <vector>

#include <ncwitt/errors.hpp>

namespace ncwitt
{

namespace
{

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class parser
{
public:
    parser(std::string_view text, const alphabet &a) : m_text(text), m_alphabet(a) {}

    free_poly parse()
    {
        skip_ws();
        if (at_end()) {
            throw syntax_error("empty expression", m_pos);
        }
        free_poly out = expr();
        skip_ws();
        if (!at_end()) {
            throw syntax_error(std::string("unexpected '") + m_text[m_pos] + "'", m_pos);
        }
        return out;
    }

private:
    bool at_end() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return at_end() ? '\0' : m_text[m_pos];
    }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    free_poly expr()
    {
        free_poly out = term();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') {
                return out;
            }
            ++m_pos;
            free_poly rhs = term();
            if (c == '+') {
                out += rhs;
            } else {
                out -= rhs;
            }
        }
    }

    // Can the next character start a factor?
    bool starts_factor()
    {
        skip_ws();
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || is_ident_start(c);
    }

    free_poly term()
    {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++m_pos;
        }
        free_poly out = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++m_pos;
                out = out * factor();
            } else if (starts_factor()) {
                if (!m_alphabet.single_char() && is_ident_start(peek())) {
                    throw syntax_error("implicit multiplication needs single-character generators; use '*'", m_pos);
                }
                out = out * factor();
            } else {
                break;
            }
        }
        return negate ? -out : out;
    }

    free_poly factor()
    {
        free_poly base = atom();
        skip_ws();
        if (peek() == '^') {
            ++m_pos;
            skip_ws();
            const std::size_t start = m_pos;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                throw syntax_error("expected a non-negative integer exponent", m_pos);
            }
            const integer e = read_integer();
            if (!e.fits_ulong_p()) {
                throw syntax_error("exponent too large", start);
            }
            return poly_pow(base, e.get_ui());
        }
        return base;
    }

    integer read_integer()
    {
        const std::size_t start = m_pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++m_pos;
        }
        return integer(std::string(m_text.substr(start, m_pos - start)));
    }

    free_poly atom()
    {
        skip_ws();
        const char c = peek();
        if (at_end()) {
            throw syntax_error("unexpected end of input", m_pos);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return free_poly::constant(m_alphabet, read_integer());
        }
        if (c == '(') {
            const std::size_t open = m_pos;
            ++m_pos;
            free_poly inner = expr();
            skip_ws();
            if (peek() != ')') {
                throw syntax_error("unbalanced '(' opened at position " + std::to_string(open), m_pos);
            }
            ++m_pos;
            return inner;
        }
        if (is_ident_start(c)) {
            const std::size_t start = m_pos;
            std::size_t len = 1;
            if (!m_alphabet.single_char()) {
                while (start + len < m_text.size() && is_ident_char(m_text[start + len])) {
                    ++len;
                }
            }
            const std::string symbol(m_text.substr(start, len));
            auto idx = m_alphabet.index_of(symbol);
            if (!idx) {
                throw unknown_generator(symbol, start);
            }
            m_pos += len;
            return free_poly::monomial(m_alphabet, word{static_cast<letter>(*idx)});
        }
        throw syntax_error(std::string("unexpected '") + c + "'", m_pos);
    }

    std::string_view m_text;
    const alphabet &m_alphabet;
    std::size_t m_pos = 0;
};

} // namespace

free_poly parse_poly(std::string_view text, const alphabet &a)
{
    return parser(text, a).parse();
}

alphabet parse_alphabet(std::string_view text)
{
    std::vector<std::string> names;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) {
            part.remove_prefix(1);
        }
        while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) {
            part.remove_suffix(1);
        }
        if (part.empty() || !is_ident_start(part.front())) {
            throw std::invalid_argument("invalid generator name in alphabet '" + std::string(text) + "'");
        }
        for (char ch : part) {
            if (!is_ident_char(ch)) {
                throw std::invalid_argument("invalid generator name '" + std::string(part) + "'");
            }
        }
        names.emplace_back(part);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return alphabet(std::move(names));
}

} // namespace ncwitt
