#pragma once

#include <string_view>

#include "phinewton/int_poly.hpp"

namespace phinewton {

/// Parses a polynomial in `x` with integer coefficients.
///
/// Accepted forms: sums of signed terms `c`, `x`, `x^e`, `c*x^e`, `cx^e`
/// (whitespace anywhere), or a bracketed ascending coefficient list such as
/// `[7,-1,0,1]`. Repeated powers are summed. Throws ParseError naming the
/// offending token and its byte offset.
IntPoly parse_poly(std::string_view text);

}  // namespace phinewton
