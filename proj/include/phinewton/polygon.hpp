#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phinewton/int_poly.hpp"
#include "phinewton/rational.hpp"

namespace phinewton {

/// (i, v_p^x(b_{n-i})) for a nonzero phi-expansion coefficient b_{n-i}.
struct PolygonPoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct PolygonEdge {
  PolygonPoint start;
  PolygonPoint end;
  Rational slope;
  long hlen = 0;
};

/// phi-Newton polygon of f with respect to p. The x-axis runs over the
/// phi-expansion indices from the top term (x = 0) down to b_0 (x = n).
struct NewtonPolygon {
  unsigned long p = 0;
  IntPoly phi;
  long length = 0;  // n, the top index of the phi-expansion
  std::vector<PolygonPoint> points;
  std::vector<PolygonEdge> edges;
};

/// Builds the polygon by the minimal-slope sweep: from the current vertex
/// take the smallest slope to any later point, preferring the largest index
/// on ties. Rejects phi | f, the zero polynomial, and phi reducible mod p.
NewtonPolygon build_polygon(const IntPoly& f, const IntPoly& phi, unsigned long p);

/// Same, from a precomputed phi-expansion.
NewtonPolygon build_polygon(const PhiExpansion& expansion, unsigned long p);

/// Drops every slope-zero edge.
NewtonPolygon principal_part(const NewtonPolygon& np);

/// Horizontal length of the slope-zero edge, 0 if there is none.
long zero_slope_length(const NewtonPolygon& np);

/// (slope, hlen) pairs in increasing slope order with equal slopes merged.
struct SlopeRun {
  Rational slope;
  long hlen = 0;
  friend bool operator==(const SlopeRun&, const SlopeRun&) = default;
};
std::vector<SlopeRun> slope_runs(const std::vector<PolygonEdge>& edges);

/// Checks that the principal part of the polygon of g*h is assembled from
/// translates of the principal-part edges of g and h in increasing slope
/// order. Throws PreconditionError when g, h, phi, p are outside the
/// setting where that is claimed (deg >= 1, phi does not divide either,
/// leading coefficients prime to p, phi irreducible mod p).
bool product_rule_holds(const IntPoly& g, const IntPoly& h, const IntPoly& phi, unsigned long p);

enum class RenderFormat { ascii, svg };

/// Deterministic text rendering of the points, vertices and edges.
std::string render(const NewtonPolygon& np, RenderFormat format);

}  // namespace phinewton
