#include "phinewton/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "phinewton/certifier.hpp"
#include "phinewton/errors.hpp"
#include "phinewton/json_io.hpp"
#include "phinewton/mod_poly.hpp"
#include "phinewton/oracle.hpp"
#include "phinewton/poly_parse.hpp"
#include "phinewton/polygon.hpp"

namespace phinewton {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

IntPoly parse_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.message(), e.token(), e.position());
  }
}

std::vector<IntPoly> parse_list(const std::string& text) {
  std::vector<IntPoly> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    out.push_back(parse_flag("--a[" + std::to_string(out.size()) + "]", text.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::uint64_t candidate_cap_from_env() {
  const char* raw = std::getenv("PHINEWTON_CANDIDATE_CAP");
  if (raw == nullptr || *raw == '\0') return 10'000'000;
  const Integer cap = parse_integer(raw);
  if (cap < 1 || !cap.fits_ulong_p()) throw UsageError("PHINEWTON_CANDIDATE_CAP must be a positive integer");
  return cap.get_ui();
}

void emit(std::ostream& out, const ordered_json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

struct CertifyFlags {
  std::string phi;
  std::optional<long> n;
  std::string an;
  std::string a;
  std::string poly;
  std::string input;
  bool oracle = false;
  bool pretty = false;
};

int run_certify(const CertifyFlags& f, CLI::App& cmd, std::ostream& out) {
  const bool structured = cmd.count("--n") || cmd.count("--an") || cmd.count("--a");
  SchurInput in;
  if (!f.input.empty()) {
    if (structured || cmd.count("--phi") || cmd.count("--poly")) throw UsageError("--input excludes --phi/--n/--an/--a/--poly");
    std::ifstream file(f.input);
    if (!file) throw UsageError("cannot open " + f.input);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(file);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(std::string("invalid JSON in ") + f.input + ": " + e.what());
    }
    in = schur_input_from_json(j);
  } else if (cmd.count("--poly")) {
    if (structured) throw UsageError("--poly excludes --n/--an/--a");
    if (!cmd.count("--phi")) throw UsageError("--poly requires --phi");
    in = schur_input_from_scaled(parse_flag("--poly", f.poly), parse_flag("--phi", f.phi));
  } else {
    for (const char* required : {"--phi", "--n", "--an", "--a"}) {
      if (!cmd.count(required)) throw UsageError(std::string("missing required flag ") + required);
    }
    in.phi = parse_flag("--phi", f.phi);
    in.n = *f.n;
    in.a_n = parse_integer(f.an);
    in.a = parse_list(f.a);
  }

  CertifyOptions options;
  options.use_oracle = f.oracle;
  options.candidate_cap = candidate_cap_from_env();
  const Certificate cert = certify(in, options);
  emit(out, certificate_to_json(cert), f.pretty);
  switch (cert.verdict) {
    case Verdict::irreducible:
      return kExitIrreducible;
    case Verdict::hypotheses_not_met:
      return kExitHypothesesNotMet;
    case Verdict::remark_case_open:
      return kExitRemarkOpen;
  }
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducibility certificates for Schur-type polynomials via phi-Newton polygons", "phinewton"};
  app.require_subcommand(1);

  CertifyFlags cf;
  auto* certify_cmd = app.add_subcommand("certify", "Certify irreducibility over Q");
  certify_cmd->add_option("--phi", cf.phi, "Monic phi(x)");
  certify_cmd->add_option("--n", cf.n, "Top exponent n");
  certify_cmd->add_option("--an", cf.an, "Integer a_n");
  certify_cmd->add_option("--a", cf.a, "a_0(x);a_1(x);...;a_{n-1}(x)  (a_0 first)");
  certify_cmd->add_option("--poly", cf.poly, "Raw F = (n+1)! f; a_j are recovered from its phi-expansion");
  certify_cmd->add_option("--input", cf.input, "JSON problem file");
  certify_cmd->add_flag("--oracle", cf.oracle, "Try to close the residual interval by bounded factor search");
  certify_cmd->add_flag("--pretty", cf.pretty, "Indent JSON output");

  unsigned long poly_p = 0;
  std::string poly_phi, poly_f, poly_render;
  bool poly_json = false;
  auto* polygon_cmd = app.add_subcommand("polygon", "phi-Newton polygon of a polynomial");
  polygon_cmd->add_option("--p", poly_p, "Prime")->required();
  polygon_cmd->add_option("--phi", poly_phi, "Monic phi(x), irreducible mod p")->required();
  polygon_cmd->add_option("--poly", poly_f, "Polynomial f(x)")->required();
  polygon_cmd->add_option("--render", poly_render, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  polygon_cmd->add_flag("--json", poly_json, "Edges as JSON (default)");

  std::string exp_phi, exp_f;
  auto* expand_cmd = app.add_subcommand("expand", "phi-adic expansion");
  expand_cmd->add_option("--phi", exp_phi, "Monic phi(x)")->required();
  expand_cmd->add_option("--poly", exp_f, "Polynomial f(x)")->required();

  unsigned long irr_p = 0;
  std::string irr_f;
  auto* modp_cmd = app.add_subcommand("modp-irred", "Irreducibility over F_p");
  modp_cmd->add_option("--p", irr_p, "Prime")->required();
  modp_cmd->add_option("--poly", irr_f, "Polynomial")->required();

  std::optional<long> h_n, h_k, h_scan;
  unsigned h_threads = 1;
  auto* hanson_cmd = app.add_subcommand("hanson", "Prime witnesses p >= k+2 dividing (n+1)n...(n-k+2)");
  hanson_cmd->add_option("--n", h_n, "n");
  hanson_cmd->add_option("--k", h_k, "k");
  hanson_cmd->add_option("--scan-to", h_scan, "Scan all 4 <= n <= N and report exceptions");
  hanson_cmd->add_option("--threads", h_threads, "Worker threads for --scan-to");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force checks");
  oracle_cmd->require_subcommand(1);
  std::string of_poly;
  long of_max = 1, of_min = 1;
  auto* factor_cmd = oracle_cmd->add_subcommand("factor", "Bounded factor search");
  factor_cmd->add_option("--poly", of_poly, "Polynomial")->required();
  factor_cmd->add_option("--max-degree", of_max, "Largest factor degree")->required();
  factor_cmd->add_option("--min-degree", of_min, "Smallest factor degree");
  std::string or_poly;
  auto* roots_cmd = oracle_cmd->add_subcommand("roots", "Rational roots");
  roots_cmd->add_option("--poly", or_poly, "Polynomial")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*certify_cmd) return run_certify(cf, *certify_cmd, out);

    if (*polygon_cmd) {
      const NewtonPolygon np = build_polygon(parse_flag("--poly", poly_f), parse_flag("--phi", poly_phi), poly_p);
      if (!poly_render.empty() && !poly_json) {
        out << render(np, poly_render == "svg" ? RenderFormat::svg : RenderFormat::ascii);
      } else {
        emit(out, polygon_edges_to_json(np), false);
      }
      return kExitOk;
    }

    if (*expand_cmd) {
      const PhiExpansion e = phi_expand(parse_flag("--poly", exp_f), parse_flag("--phi", exp_phi));
      ordered_json j;
      j["phi"] = e.phi.to_string();
      j["terms"] = ordered_json::array();
      for (const auto& t : e.terms) j["terms"].push_back(t.to_string());
      emit(out, j, false);
      return kExitOk;
    }

    if (*modp_cmd) {
      const ModPoly f = reduce(parse_flag("--poly", irr_f), irr_p);
      ordered_json j;
      j["p"] = irr_p;
      j["poly"] = IntPoly(std::vector<Integer>(f.coeffs().begin(), f.coeffs().end())).to_string();
      j["irreducible"] = rabin_irreducible(f);
      emit(out, j, false);
      return kExitOk;
    }

    if (*hanson_cmd) {
      if (h_scan) {
        if (h_n || h_k) throw UsageError("--scan-to excludes --n/--k");
        ordered_json j;
        j["scan_to"] = *h_scan;
        j["exceptions"] = ordered_json::array();
        for (const auto& [n, k] : hanson_scan(4, *h_scan, h_threads)) j["exceptions"].push_back({n, k});
        emit(out, j, false);
        return kExitOk;
      }
      if (!h_n) throw UsageError("hanson needs --n or --scan-to");
      if (h_k) {
        try {
          ordered_json j;
          j["prime"] = hanson_witness(*h_n, *h_k);
          emit(out, j, false);
          return kExitOk;
        } catch (const NoWitness& e) {
          err << "error: " << e.what() << "\n";
          return kExitNoResult;
        }
      }
      ordered_json j;
      j["n"] = *h_n;
      j["witnesses"] = ordered_json::array();
      j["exceptions"] = ordered_json::array();
      for (long k = 2; k <= *h_n / 2; ++k) {
        try {
          const unsigned long p = hanson_witness(*h_n, k);
          j["witnesses"].push_back({{"k", k}, {"prime", p}});
        } catch (const NoWitness&) {
          j["exceptions"].push_back({*h_n, k});
        }
      }
      emit(out, j, false);
      return kExitOk;
    }

    if (*factor_cmd) {
      const IntPoly f = parse_flag("--poly", of_poly);
      if (f.is_zero()) throw UsageError("--poly must be nonzero");
      FactorSearchBudget budget;
      budget.min_degree = of_min;
      budget.max_degree = of_max;
      budget.candidate_cap = candidate_cap_from_env();
      const IntPoly prim = primitive_part(f);
      ordered_json j;
      j["poly"] = f.to_string();
      try {
        const auto factor = bounded_factor_search(prim, budget);
        j["status"] = factor ? "found" : "none";
        j["factor"] = factor ? ordered_json(factor->to_string()) : ordered_json(nullptr);
        emit(out, j, false);
        return kExitOk;
      } catch (const BudgetExceeded& e) {
        j["status"] = "refused";
        j["factor"] = nullptr;
        j["detail"] = e.what();
        emit(out, j, false);
        return kExitNoResult;
      }
    }

    if (*roots_cmd) {
      ordered_json j;
      j["roots"] = ordered_json::array();
      for (const auto& r : rational_roots(parse_flag("--poly", or_poly))) {
        j["roots"].push_back(r.denominator() == 1 ? r.numerator().get_str() : r.to_string());
      }
      emit(out, j, false);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace phinewton
