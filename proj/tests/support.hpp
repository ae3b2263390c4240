#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing in
// here calls into the code path it is used to check.

#include <algorithm>
#include <random>
#include <vector>

#include "phinewton/int_poly.hpp"
#include "phinewton/polygon.hpp"
#include "phinewton/rational.hpp"

namespace phinewton::testing {

inline IntPoly random_poly(std::mt19937_64& rng, long max_degree, long coeff_range) {
  std::uniform_int_distribution<long> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-coeff_range, coeff_range);
  const long d = deg(rng);
  std::vector<Integer> c;
  for (long i = 0; i <= d; ++i) c.emplace_back(coef(rng));
  return IntPoly(std::move(c));
}

inline IntPoly random_nonzero_poly(std::mt19937_64& rng, long max_degree, long coeff_range) {
  IntPoly f;
  while (f.is_zero()) f = random_poly(rng, max_degree, coeff_range);
  return f;
}

inline IntPoly random_monic(std::mt19937_64& rng, long degree, long coeff_range) {
  std::uniform_int_distribution<long> coef(-coeff_range, coeff_range);
  std::vector<Integer> c;
  for (long i = 0; i < degree; ++i) c.emplace_back(coef(rng));
  c.emplace_back(1);
  return IntPoly(std::move(c));
}

/// Lower-hull edges by exhaustive pair enumeration: (a, b) is an edge iff no
/// point lies strictly below the line through a and b, and a and b are the
/// leftmost and rightmost points on that line.
inline std::vector<std::pair<PolygonPoint, PolygonPoint>> brute_force_hull(const std::vector<PolygonPoint>& pts) {
  std::vector<std::pair<PolygonPoint, PolygonPoint>> edges;
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (b.x <= a.x) continue;
      bool ok = true;
      for (const auto& c : pts) {
        // Sign of (c - a) x (b - a) in the lattice; below the line means negative height.
        const long lhs = (c.y - a.y) * (b.x - a.x);
        const long rhs = (b.y - a.y) * (c.x - a.x);
        if (lhs < rhs) ok = false;
        if (lhs == rhs && (c.x < a.x || c.x > b.x)) ok = false;
      }
      if (ok) edges.emplace_back(a, b);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& l, const auto& r) { return l.first.x < r.first.x; });
  return edges;
}

}  // namespace phinewton::testing

namespace phinewton::testing {

/// Monic lifts of polynomials irreducible modulo p, for p in {2, 3, 5, 7}.
inline std::vector<IntPoly> irreducible_table(unsigned long p) {
  switch (p) {
    case 2:
      return {IntPoly::from_longs({1, 1}), IntPoly::from_longs({1, 1, 1}), IntPoly::from_longs({1, 1, 0, 1}),
              IntPoly::from_longs({-1, 1, 1})};
    case 3:
      return {IntPoly::from_longs({0, 1}), IntPoly::from_longs({1, 0, 1}), IntPoly::from_longs({1, -1, 0, 1}),
              IntPoly::from_longs({-1, 1, 1})};
    case 5:
      return {IntPoly::from_longs({2, 1}), IntPoly::from_longs({2, 0, 1}), IntPoly::from_longs({1, 1, 0, 1})};
    case 7:
      return {IntPoly::from_longs({-3, 1}), IntPoly::from_longs({1, 0, 1}), IntPoly::from_longs({2, 0, 0, 1})};
    default:
      return {};
  }
}

/// Polynomial of degree <= max_degree with phi-expansion coefficients of
/// random p-adic size: top coefficient has leading term prime to p, lower
/// ones are scaled by p^e (0 <= e <= 3), b_0 != 0 so phi does not divide it.
inline IntPoly random_phi_shaped(std::mt19937_64& rng, const IntPoly& phi, unsigned long p, long max_degree) {
  const long dphi = phi.degree();
  std::uniform_int_distribution<long> top_index(1, max_degree / dphi);
  std::uniform_int_distribution<long> small(-6, 6);
  std::uniform_int_distribution<int> expo(0, 3);
  std::uniform_int_distribution<int> coin(0, 3);
  const long m = top_index(rng);

  auto random_remainder = [&](long max_deg) {
    std::vector<Integer> c;
    const long d = std::uniform_int_distribution<long>(0, max_deg)(rng);
    for (long i = 0; i <= d; ++i) c.emplace_back(small(rng));
    return IntPoly(std::move(c));
  };

  std::vector<IntPoly> terms(static_cast<std::size_t>(m) + 1);
  {
    IntPoly top = random_remainder(std::min(dphi - 1, max_degree - m * dphi));
    std::vector<Integer> c(top.coeffs().begin(), top.coeffs().end());
    if (c.empty()) c.emplace_back(0);
    long lead;
    do {
      lead = small(rng);
    } while (lead == 0 || lead % static_cast<long>(p) == 0);
    c.back() = lead;
    terms[m] = IntPoly(std::move(c));
  }
  for (long i = 0; i < m; ++i) {
    if (i > 0 && coin(rng) == 0) continue;
    IntPoly t;
    while (t.is_zero()) t = random_remainder(dphi - 1);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p, static_cast<unsigned long>(expo(rng)));
    terms[i] = t * scale;
  }
  return phi_assemble({phi, terms});
}

struct ProductRuleInstance {
  IntPoly g;
  IntPoly h;
  IntPoly phi;
  unsigned long p;
};

inline ProductRuleInstance random_product_instance(std::mt19937_64& rng) {
  static const unsigned long kPrimes[] = {2, 3, 5, 7};
  const unsigned long p = kPrimes[std::uniform_int_distribution<int>(0, 3)(rng)];
  const auto table = irreducible_table(p);
  const IntPoly phi = table[std::uniform_int_distribution<std::size_t>(0, table.size() - 1)(rng)];
  return {random_phi_shaped(rng, phi, p, 12), random_phi_shaped(rng, phi, p, 12), phi, p};
}

}  // namespace phinewton::testing
