#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phinewton/integer.hpp"

namespace phinewton {

/// Dense univariate polynomial over Z. Coefficient i multiplies x^i.
///
/// The representation is canonical: the coefficient vector is either empty
/// (the zero polynomial) or ends with a nonzero entry. The zero polynomial
/// has degree `kMinusInfinity`, never 0.
class IntPoly {
 public:
  static constexpr long kMinusInfinity = std::numeric_limits<long>::min();

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly constant(Integer c);
  static IntPoly monomial(Integer c, std::size_t exponent);
  static IntPoly x() { return monomial(1, 1); }
  static IntPoly from_longs(std::initializer_list<long> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  long degree() const noexcept {
    return coeffs_.empty() ? kMinusInfinity : static_cast<long>(coeffs_.size()) - 1;
  }

  /// Coefficient of x^i; zero beyond the degree.
  const Integer& coeff(std::size_t i) const;
  /// Leading coefficient. Requires a nonzero polynomial.
  const Integer& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Text form accepted back by `parse_poly`, e.g. "x^3-x+7".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& f, const IntPoly& g);
IntPoly mul(const IntPoly& f, const IntPoly& g);
IntPoly pow(const IntPoly& f, unsigned e);

struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic divisor of degree >= 1; exact over Z.
DivRem divrem_monic(const IntPoly& f, const IntPoly& d);

/// Positive gcd of the coefficients. Throws DomainError on the zero polynomial.
Integer content(const IntPoly& f);
/// f / content(f); the sign of f is kept.
IntPoly primitive_part(const IntPoly& f);

Integer evaluate(const IntPoly& f, const Integer& x0);

/// f = sum_i terms[i] * phi^i with deg terms[i] < deg phi.
struct PhiExpansion {
  IntPoly phi;
  std::vector<IntPoly> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  /// Index of the top term; only meaningful when !is_zero().
  long top_index() const noexcept { return static_cast<long>(terms.size()) - 1; }
};

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi);
IntPoly phi_assemble(const PhiExpansion& e);

}  // namespace phinewton
