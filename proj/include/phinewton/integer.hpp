#pragma once

#include <gmpxx.h>

#include <string>

namespace phinewton {

/// Arbitrary-precision integer used for every coefficient and scaled quantity.
using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses a signed decimal integer; throws DomainError on malformed text.
Integer parse_integer(const std::string& text);

}  // namespace phinewton
