#pragma once

#include <string_view>

#include "cayley/polyring.hpp"

namespace cayley {

// Grammar (whitespace-insensitive):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*        division only by nonzero constants
//   power  := atom ('^' integer)?
//   atom   := integer | name | '(' expr ')' | '-' atom
// Throws ParseError with a 1-based line and column.
MultiPoly parse_poly(std::string_view text, const VarSetPtr& vars);

// Parses over the Pluecker ring, or over x0..x3,p01..p23 when point
// variables occur.
MultiPoly parse_poly(std::string_view text);

}  // namespace cayley
