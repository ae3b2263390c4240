#pragma once

#include <json.hpp>

#include "phinewton/certifier.hpp"
#include "phinewton/polygon.hpp"

namespace phinewton {

using ordered_json = nlohmann::ordered_json;

/// Ascending coefficient list as decimal strings.
ordered_json poly_to_json(const IntPoly& f);

/// Accepts a polynomial string in the text grammar, or an array of integer
/// coefficients (numbers or decimal strings) in ascending degree.
IntPoly poly_from_json(const nlohmann::json& j);

/// Fixed key order: verdict, n, phi, checks, small_factor_prime, witnesses,
/// excluded_intervals, remark, residual_interval. Integers are decimal strings.
ordered_json certificate_to_json(const Certificate& cert);

/// Parses and schema-checks a certificate; throws DomainError on any mismatch.
Certificate certificate_from_json(const nlohmann::json& j);

/// Throws DomainError when the verdict is not backed by the recorded data.
void check_certificate_invariants(const Certificate& cert);

/// Problem file: {"phi": ..., "n": ..., "a_n": ..., "a": [a_0, ..., a_{n-1}]}.
SchurInput schur_input_from_json(const nlohmann::json& j);

/// [{"slope": "a/b", "hlen": h, "start": [x, y], "end": [x, y]}, ...]
ordered_json polygon_edges_to_json(const NewtonPolygon& np);

}  // namespace phinewton
