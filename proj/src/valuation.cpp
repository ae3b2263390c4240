#include "phinewton/valuation.hpp"

#include <algorithm>
#include <limits>

#include "phinewton/errors.hpp"
#include "phinewton/primes.hpp"

namespace phinewton {

namespace {
void require_prime(unsigned long p) {
  if (!is_prime(p)) throw DomainError("valuation base " + std::to_string(p) + " is not prime");
}
}  // namespace

unsigned long vp(const Integer& b, unsigned long p) {
  require_prime(p);
  if (b == 0) throw DomainError("p-adic valuation of zero");
  Integer rest;
  const Integer prime(p);
  return mpz_remove(rest.get_mpz_t(), b.get_mpz_t(), prime.get_mpz_t());
}

unsigned long vpx(const IntPoly& f, unsigned long p) {
  if (f.is_zero()) throw DomainError("Gauss valuation of the zero polynomial");
  unsigned long best = std::numeric_limits<unsigned long>::max();
  for (const auto& c : f.coeffs()) {
    if (c == 0) continue;
    best = std::min(best, vp(c, p));
    if (best == 0) break;
  }
  return best;
}

unsigned long legendre_vp_factorial(unsigned long m, unsigned long p) {
  require_prime(p);
  unsigned long total = 0;
  for (unsigned long q = m / p; q > 0; q /= p) total += q;
  return total;
}

}  // namespace phinewton
