#pragma once

#include <string_view>

#include "hilb/localization.hpp"

namespace hilb {

// Parses a product of tautological factors:
//
//   expr := term ('*' term)*
//   term := 'c1(L)' ['^' int] | 's' int '(E*L)'
//
// Whitespace may separate tokens. Powers of c1(L) accumulate; at most one
// Segre factor is allowed. Throws ParseError carrying the byte offset and the
// set of tokens that would have been accepted there.
IntegrandSpec parse_integrand(std::string_view text);

}  // namespace hilb
