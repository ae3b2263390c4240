#include "phinewton/json_io.hpp"

#include <algorithm>

#include "phinewton/errors.hpp"
#include "phinewton/poly_parse.hpp"

namespace phinewton {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) { throw DomainError("certificate schema: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

Integer integer_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.dump(), 10);
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw DomainError(what + ": expected an integer");
}

long long_from_string(const json& j, const std::string& what) {
  if (!j.is_string()) schema_error(what + " must be a decimal string");
  const Integer z = parse_integer(j.get<std::string>());
  if (!z.fits_slong_p()) schema_error(what + " out of range");
  return z.get_si();
}

ordered_json interval_to_json(const DegreeInterval& d) { return ordered_json::array({std::to_string(d.lo), std::to_string(d.hi)}); }

DegreeInterval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("interval must be a pair");
  DegreeInterval d{long_from_string(j[0], "interval bound"), long_from_string(j[1], "interval bound")};
  if (d.lo >= d.hi) schema_error("empty interval");
  return d;
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::irreducible, Verdict::hypotheses_not_met, Verdict::remark_case_open}) {
    if (to_string(v) == s) return v;
  }
  schema_error("unknown verdict '" + s + "'");
}

}  // namespace

ordered_json poly_to_json(const IntPoly& f) {
  ordered_json out = ordered_json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPoly poly_from_json(const json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (j.is_number_integer()) return IntPoly::constant(integer_from_json(j, "polynomial"));
  if (!j.is_array()) throw DomainError("polynomial must be a string or a coefficient array");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x, "coefficient"));
  return IntPoly(std::move(c));
}

ordered_json certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["verdict"] = to_string(cert.verdict);
  j["n"] = std::to_string(cert.n);
  j["phi"] = poly_to_json(cert.phi);
  j["checks"] = ordered_json::array();
  for (const auto& c : cert.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    j["checks"].push_back(std::move(e));
  }
  j["small_factor_prime"] = cert.small_factor_prime ? ordered_json(std::to_string(*cert.small_factor_prime)) : ordered_json(nullptr);
  j["witnesses"] = ordered_json::array();
  for (const auto& w : cert.witnesses) {
    ordered_json e;
    e["k"] = std::to_string(w.k);
    e["prime"] = std::to_string(w.p);
    j["witnesses"].push_back(std::move(e));
  }
  j["excluded_intervals"] = ordered_json::array();
  for (const auto& d : cert.excluded_intervals) j["excluded_intervals"].push_back(interval_to_json(d));
  j["remark"] = cert.remark == RemarkCase::none ? ordered_json(nullptr) : ordered_json(to_string(cert.remark));
  j["residual_interval"] = cert.residual_interval ? ordered_json(interval_to_json(*cert.residual_interval)) : ordered_json(nullptr);
  return j;
}

Certificate certificate_from_json(const json& j) {
  static const std::vector<std::string> kKeys = {"verdict",   "n",
                                                 "phi",       "checks",
                                                 "small_factor_prime", "witnesses",
                                                 "excluded_intervals", "remark",
                                                 "residual_interval"};
  if (!j.is_object()) schema_error("not an object");
  for (const auto& [key, _] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) schema_error("unexpected field '" + key + "'");
  }
  Certificate cert;
  const json& verdict = field(j, "verdict");
  if (!verdict.is_string()) schema_error("verdict must be a string");
  cert.verdict = verdict_from_string(verdict.get<std::string>());
  cert.n = long_from_string(field(j, "n"), "n");

  const json& phi = field(j, "phi");
  if (!phi.is_array()) schema_error("phi must be a coefficient array");
  for (const auto& c : phi) {
    if (!c.is_string()) schema_error("phi coefficients must be strings");
  }
  cert.phi = poly_from_json(phi);

  const json& checks = field(j, "checks");
  if (!checks.is_array()) schema_error("checks must be an array");
  for (const auto& c : checks) {
    if (!field(c, "name").is_string() || !field(c, "pass").is_boolean() || !field(c, "detail").is_string()) {
      schema_error("malformed check entry");
    }
    cert.checks.push_back({c["name"].get<std::string>(), c["pass"].get<bool>(), c["detail"].get<std::string>()});
  }

  const json& sfp = field(j, "small_factor_prime");
  if (!sfp.is_null()) cert.small_factor_prime = static_cast<unsigned long>(long_from_string(sfp, "small_factor_prime"));

  const json& witnesses = field(j, "witnesses");
  if (!witnesses.is_array()) schema_error("witnesses must be an array");
  for (const auto& w : witnesses) {
    cert.witnesses.push_back(
        {long_from_string(field(w, "k"), "k"), static_cast<unsigned long>(long_from_string(field(w, "prime"), "prime"))});
  }

  const json& excluded = field(j, "excluded_intervals");
  if (!excluded.is_array()) schema_error("excluded_intervals must be an array");
  for (const auto& d : excluded) cert.excluded_intervals.push_back(interval_from_json(d));

  const json& remark = field(j, "remark");
  if (remark.is_null()) {
    cert.remark = RemarkCase::none;
  } else if (remark == "n_plus_1_power_of_two") {
    cert.remark = RemarkCase::n_plus_1_power_of_two;
  } else if (remark == "n_equals_8") {
    cert.remark = RemarkCase::n_equals_8;
  } else {
    schema_error("unknown remark");
  }

  const json& residual = field(j, "residual_interval");
  if (!residual.is_null()) cert.residual_interval = interval_from_json(residual);
  check_certificate_invariants(cert);
  return cert;
}

void check_certificate_invariants(const Certificate& cert) {
  auto check_passed = [&](std::string_view prefix) {
    return std::any_of(cert.checks.begin(), cert.checks.end(),
                       [&](const HypothesisCheck& c) { return c.name.starts_with(prefix) && c.pass; });
  };
  if (cert.n < 1) schema_error("n must be positive");
  if (cert.remark == RemarkCase::none && cert.residual_interval) schema_error("residual interval without remark");

  if (cert.verdict == Verdict::irreducible) {
    for (const char* h : {"H3", "H4", "H5", "H6"}) {
      if (!check_passed(h)) schema_error(std::string("IRREDUCIBLE with failing ") + h);
    }
    if (!cert.small_factor_prime) schema_error("IRREDUCIBLE without small_factor_prime");
    const bool via_oracle = check_passed("oracle_residual_interval");
    if (!via_oracle && !(check_passed("H1") && check_passed("H2"))) schema_error("IRREDUCIBLE with failing H1/H2");
    for (long k = 1; k <= cert.n / 2; ++k) {
      const bool covered = std::any_of(cert.witnesses.begin(), cert.witnesses.end(),
                                       [&](const PrimeWitness& w) { return w.k == k; });
      const bool residual = via_oracle && cert.residual_interval && cert.residual_interval->lo == k * cert.phi.degree();
      if (!covered && !residual) schema_error("IRREDUCIBLE without witness for k = " + std::to_string(k));
    }
  }
  if (cert.verdict == Verdict::remark_case_open && (cert.remark == RemarkCase::none || !cert.residual_interval)) {
    schema_error("REMARK_CASE_OPEN without remark and residual interval");
  }
  for (const auto& w : cert.witnesses) {
    if (w.k < 1 || w.p < static_cast<unsigned long>(w.k) + 2) schema_error("witness prime below k+2");
  }
}

SchurInput schur_input_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("problem file must be a JSON object");
  for (const char* key : {"phi", "n", "a_n", "a"}) {
    if (!j.contains(key)) throw DomainError(std::string("problem file: missing '") + key + "'");
  }
  SchurInput in;
  in.phi = poly_from_json(j["phi"]);
  const Integer n = integer_from_json(j["n"], "n");
  if (!n.fits_slong_p()) throw DomainError("problem file: n out of range");
  in.n = n.get_si();
  in.a_n = integer_from_json(j["a_n"], "a_n");
  if (!j["a"].is_array()) throw DomainError("problem file: 'a' must be an array");
  for (const auto& x : j["a"]) in.a.push_back(poly_from_json(x));
  return in;
}

ordered_json polygon_edges_to_json(const NewtonPolygon& np) {
  ordered_json out = ordered_json::array();
  for (const auto& e : np.edges) {
    ordered_json edge;
    edge["slope"] = e.slope.to_string();
    edge["hlen"] = e.hlen;
    edge["start"] = {e.start.x, e.start.y};
    edge["end"] = {e.end.x, e.end.y};
    out.push_back(std::move(edge));
  }
  return out;
}

}  // namespace phinewton
