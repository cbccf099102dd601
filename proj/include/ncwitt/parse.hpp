#ifndef NCWITT_PARSE_HPP
#define NCWITT_PARSE_HPP

#include <string>
#include <string_view>

#include <ncwitt/freealg.hpp>

namespace ncwitt
{

// Parses a free-algebra expression over `a`.
//
//   expr   := term (('+' | '-') term)*
//   term   := '-'? factor ('*'? factor)*
//   factor := atom ('^' nat)?
//   atom   := int | generator | '(' expr ')'
//
// Juxtaposition (`XYXY`, `2X^2`) is accepted only when every generator name is
// a single character; otherwise factors need an explicit `*`.
// Throws syntax_error and unknown_generator.
free_poly parse_poly(std::string_view text, const alphabet &a);

// Parses a comma-separated generator list such as "X,Y".
alphabet parse_alphabet(std::string_view text);

} // namespace ncwitt

#endif
