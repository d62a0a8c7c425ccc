#ifndef EQSING_PARSE_HPP
#define EQSING_PARSE_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "eqsing/poly.hpp"

namespace eqsing {

/// Parses a polynomial in the variables x1..xN.
///
/// Grammar (whitespace insignificant):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' integer]
///   atom   := integer ['/' integer] | 'x' index | '(' expr ')'
///
/// With nvars unset the ring is sized by the largest variable index seen.
/// Throws ParseError carrying the offset of the first bad character.
Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

}  // namespace eqsing

#endif  // EQSING_PARSE_HPP
