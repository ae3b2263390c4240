#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "phinewton/int_poly.hpp"

namespace phinewton {

/// Polynomial over F_p for a machine-word prime p < 2^32.
///
/// Coefficients are residues in [0, p); the coefficient vector is canonical
/// in the same sense as IntPoly (empty for zero, nonzero last entry).
class ModPoly {
 public:
  ModPoly(unsigned long p, std::vector<std::uint64_t> coeffs);

  static ModPoly zero(unsigned long p) { return ModPoly(p, {}); }
  static ModPoly constant(unsigned long p, std::uint64_t c) { return ModPoly(p, {c}); }
  static ModPoly x(unsigned long p) { return ModPoly(p, {0, 1}); }

  unsigned long modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept {
    return c_.empty() ? IntPoly::kMinusInfinity : static_cast<long>(c_.size()) - 1;
  }
  std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const;
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

  friend bool operator==(const ModPoly&, const ModPoly&) = default;

 private:
  unsigned long p_;
  std::vector<std::uint64_t> c_;
};

/// Coefficient-wise reduction; rejects composite (or too large) p.
ModPoly reduce(const IntPoly& f, unsigned long p);

ModPoly mod_add(const ModPoly& a, const ModPoly& b);
ModPoly mod_sub(const ModPoly& a, const ModPoly& b);
ModPoly mod_mul(const ModPoly& a, const ModPoly& b);
/// (a * b) mod m for monic m of degree >= 1.
ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m);
/// Remainder of a modulo a nonzero b.
ModPoly mod_rem(const ModPoly& a, const ModPoly& b);
/// Monic gcd (zero only when both inputs are zero).
ModPoly mod_gcd(ModPoly a, ModPoly b);
ModPoly make_monic(const ModPoly& a);

/// x^(p^e) mod m, by e rounds of p-th powering.
ModPoly frobenius_power(const ModPoly& m, unsigned long e);

/// Rabin's irreducibility test over F_p. Rejects constants.
bool rabin_irreducible(const ModPoly& f);

/// Exhaustive trial division by every monic polynomial of degree
/// 1..deg f / 2. Restricted to p <= 7 and deg f <= 8.
bool naive_irreducible(const ModPoly& f);

struct IrreducibilityReport {
  bool pass = true;
  std::optional<unsigned long> failing_prime;
  std::vector<unsigned long> primes_checked;
};

/// Tests irreducibility of phi modulo every prime <= bound; stops at the first failure.
IrreducibilityReport irreducible_mod_all(const IntPoly& phi, unsigned long bound);

}  // namespace phinewton
