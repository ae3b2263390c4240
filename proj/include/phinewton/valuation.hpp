#pragma once

#include "phinewton/int_poly.hpp"
#include "phinewton/integer.hpp"

namespace phinewton {

/// Largest e with p^e | b. The valuation of 0 is not representable, so b = 0
/// throws DomainError; callers branch on zero first.
unsigned long vp(const Integer& b, unsigned long p);

/// Gauss valuation: minimum of vp over the nonzero coefficients of f.
unsigned long vpx(const IntPoly& f, unsigned long p);

/// v_p(m!) via Legendre's formula sum_{i>=1} floor(m / p^i).
unsigned long legendre_vp_factorial(unsigned long m, unsigned long p);

}  // namespace phinewton
