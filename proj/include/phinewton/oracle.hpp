#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phinewton/int_poly.hpp"
#include "phinewton/rational.hpp"

namespace phinewton {

struct FactorSearchBudget {
  long min_degree = 1;
  long max_degree = 1;
  /// Overrides the per-degree Mignotte bound when set.
  std::optional<Integer> coeff_bound;
  std::uint64_t candidate_cap = 10'000'000;
};

/// 2^d * ceil(||f||_2): bounds the coefficients of any degree-d factor of f.
Integer mignotte_bound(const IntPoly& f, long d);

/// Number of candidates bounded_factor_search would enumerate.
Integer search_space_size(const IntPoly& f, const FactorSearchBudget& budget);

/// Exhaustive search for a factor g of the primitive polynomial f with
/// min_degree <= deg g <= max_degree (capped at deg f - 1). Candidates have
/// a positive leading coefficient dividing lc(f) and remaining coefficients
/// in [-B, B]; they are tried by degree, then leading coefficient, then
/// lexicographically from x^{d-1} down to x^0. Returns the first divisor.
/// Throws BudgetExceeded (before searching) when the space exceeds the cap.
std::optional<IntPoly> bounded_factor_search(const IntPoly& f, const FactorSearchBudget& budget);

/// All rational roots of f, ascending, each confirmed by exact evaluation.
std::vector<Rational> rational_roots(const IntPoly& f);

/// True iff the product of `factors` equals f exactly.
bool verify_factorization(const IntPoly& f, std::span<const IntPoly> factors);

/// Positive divisors of |m| in increasing order (m != 0), by trial division.
std::vector<Integer> positive_divisors(const Integer& m);

}  // namespace phinewton
