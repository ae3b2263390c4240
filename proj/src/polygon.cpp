#include "phinewton/polygon.hpp"

#include <algorithm>
#include <stdexcept>

#include "phinewton/errors.hpp"
#include "phinewton/mod_poly.hpp"
#include "phinewton/primes.hpp"
#include "phinewton/valuation.hpp"

namespace phinewton {

namespace {

void check_phi(const IntPoly& phi, unsigned long p) {
  if (!is_prime(p)) throw DomainError("polygon: " + std::to_string(p) + " is not prime");
  if (phi.degree() < 1 || !phi.is_monic()) throw DomainError("polygon: phi must be monic of degree >= 1");
  if (!rabin_irreducible(reduce(phi, p))) {
    throw DomainError("polygon: phi is reducible modulo " + std::to_string(p));
  }
}

// Slopes must strictly increase and every point must lie on or above the path.
void assert_lower_hull(const NewtonPolygon& np) {
  for (std::size_t i = 1; i < np.edges.size(); ++i) {
    if (!(np.edges[i - 1].slope < np.edges[i].slope)) throw std::logic_error("polygon slopes not strictly increasing");
  }
  for (const auto& pt : np.points) {
    for (const auto& e : np.edges) {
      if (pt.x < e.start.x || pt.x > e.end.x) continue;
      const Rational line = Rational(e.start.y) + e.slope * Rational(pt.x - e.start.x);
      if (Rational(pt.y) < line) throw std::logic_error("polygon point below hull");
    }
  }
}

}  // namespace

NewtonPolygon build_polygon(const PhiExpansion& expansion, unsigned long p) {
  check_phi(expansion.phi, p);
  if (expansion.is_zero()) throw DomainError("polygon: zero polynomial");
  if (expansion.terms.front().is_zero()) throw DomainError("polygon: phi divides f (b_0 = 0)");

  NewtonPolygon np;
  np.p = p;
  np.phi = expansion.phi;
  np.length = expansion.top_index();
  for (long i = 0; i <= np.length; ++i) {
    const IntPoly& b = expansion.terms[static_cast<std::size_t>(np.length - i)];
    if (b.is_zero()) continue;
    np.points.push_back({i, static_cast<long>(vpx(b, p))});
  }

  std::size_t cur = 0;
  while (cur + 1 < np.points.size()) {
    const PolygonPoint& from = np.points[cur];
    std::size_t best = cur + 1;
    Rational best_slope;
    for (std::size_t j = cur + 1; j < np.points.size(); ++j) {
      const PolygonPoint& to = np.points[j];
      Rational s(to.y - from.y, to.x - from.x);
      // `<=` keeps the largest index among equal minimal slopes.
      if (j == cur + 1 || s <= best_slope) {
        best = j;
        best_slope = s;
      }
    }
    np.edges.push_back({from, np.points[best], best_slope, np.points[best].x - from.x});
    cur = best;
  }
  assert_lower_hull(np);
  return np;
}

NewtonPolygon build_polygon(const IntPoly& f, const IntPoly& phi, unsigned long p) {
  check_phi(phi, p);
  if (f.is_zero()) throw DomainError("polygon: zero polynomial");
  return build_polygon(phi_expand(f, phi), p);
}

NewtonPolygon principal_part(const NewtonPolygon& np) {
  NewtonPolygon out = np;
  std::erase_if(out.edges, [](const PolygonEdge& e) { return e.slope.sign() == 0; });
  return out;
}

long zero_slope_length(const NewtonPolygon& np) {
  long total = 0;
  for (const auto& e : np.edges) {
    if (e.slope.sign() == 0) total += e.hlen;
  }
  return total;
}

std::vector<SlopeRun> slope_runs(const std::vector<PolygonEdge>& edges) {
  std::vector<SlopeRun> runs;
  runs.reserve(edges.size());
  for (const auto& e : edges) runs.push_back({e.slope, e.hlen});
  std::stable_sort(runs.begin(), runs.end(), [](const SlopeRun& a, const SlopeRun& b) { return a.slope < b.slope; });
  std::vector<SlopeRun> merged;
  for (const auto& r : runs) {
    if (!merged.empty() && merged.back().slope == r.slope) {
      merged.back().hlen += r.hlen;
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

bool product_rule_holds(const IntPoly& g, const IntPoly& h, const IntPoly& phi, unsigned long p) {
  std::vector<std::string> violations;
  if (!is_prime(p)) {
    throw PreconditionError({"p_prime"});
  }
  if (g.degree() < 1) violations.emplace_back("deg_g_positive");
  if (h.degree() < 1) violations.emplace_back("deg_h_positive");
  const bool phi_ok = phi.degree() >= 1 && phi.is_monic();
  if (!phi_ok) {
    violations.emplace_back("phi_monic");
  } else if (!rabin_irreducible(reduce(phi, p))) {
    violations.emplace_back("phi_irreducible_mod_p");
  }
  if (!g.is_zero() && mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) violations.emplace_back("lc_g_coprime_to_p");
  if (!h.is_zero() && mpz_divisible_ui_p(h.leading().get_mpz_t(), p)) violations.emplace_back("lc_h_coprime_to_p");
  if (phi_ok && !g.is_zero() && divrem_monic(g, phi).remainder.is_zero()) violations.emplace_back("phi_not_dividing_g");
  if (phi_ok && !h.is_zero() && divrem_monic(h, phi).remainder.is_zero()) violations.emplace_back("phi_not_dividing_h");
  if (!violations.empty()) throw PreconditionError(std::move(violations));

  const NewtonPolygon ng = principal_part(build_polygon(g, phi, p));
  const NewtonPolygon nh = principal_part(build_polygon(h, phi, p));
  const NewtonPolygon ngh = principal_part(build_polygon(g * h, phi, p));

  std::vector<PolygonEdge> combined = ng.edges;
  combined.insert(combined.end(), nh.edges.begin(), nh.edges.end());
  return slope_runs(combined) == slope_runs(ngh.edges);
}

}  // namespace phinewton
