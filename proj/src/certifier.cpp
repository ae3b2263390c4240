#include "phinewton/certifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "phinewton/errors.hpp"
#include "phinewton/mod_poly.hpp"
#include "phinewton/oracle.hpp"
#include "phinewton/primes.hpp"
#include "phinewton/valuation.hpp"

namespace phinewton {

namespace {

std::string join_primes(const std::vector<unsigned long>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + std::to_string(ps[i]);
  return out;
}

bool phi_usable(const IntPoly& phi) { return phi.degree() >= 1 && phi.is_monic(); }

// First prime <= bound dividing c, if any.
std::optional<unsigned long> small_prime_divisor(const Integer& c, unsigned long bound) {
  for (unsigned long p : primes_up_to(bound)) {
    if (mpz_divisible_ui_p(c.get_mpz_t(), p)) return p;
  }
  return std::nullopt;
}

DegreeInterval band(long k, long deg_phi) { return {k * deg_phi, (k + 1) * deg_phi}; }

}  // namespace

GeneralSchurInput generalize(const SchurInput& in) {
  GeneralSchurInput g{in.phi, in.n, in.a};
  g.a.push_back(IntPoly::constant(in.a_n));
  return g;
}

void validate(const SchurInput& in) {
  if (in.n < 1) throw DomainError("schur input: n must be positive");
  if (static_cast<long>(in.a.size()) != in.n) {
    throw DomainError("schur input: expected " + std::to_string(in.n) + " polynomials a_0..a_{n-1}, got " +
                      std::to_string(in.a.size()));
  }
  if (in.a_n == 0) throw DomainError("schur input: a_n must be nonzero");
  if (in.a.front().is_zero()) throw DomainError("schur input: a_0 must be nonzero");
  if (in.phi.degree() < 1) throw DomainError("schur input: phi must have degree >= 1");
}

ScaledExpansion scaled_expansion(const GeneralSchurInput& in) {
  if (in.n < 0 || static_cast<long>(in.a.size()) != in.n + 1) throw DomainError("scaled_expansion: need a_0..a_n");
  const auto count = static_cast<std::size_t>(in.n) + 1;
  ScaledExpansion s;
  s.phi = in.phi;
  s.b.assign(count, Integer(1));
  for (long j = in.n - 1; j >= 0; --j) s.b[j] = s.b[j + 1] * (j + 2);
  s.terms.reserve(count);
  for (std::size_t j = 0; j < count; ++j) s.terms.push_back(in.a[j] * s.b[j]);
  return s;
}

ScaledExpansion scaled_expansion(const SchurInput& in) { return scaled_expansion(generalize(in)); }

SchurInput schur_input_from_scaled(const IntPoly& F, const IntPoly& phi) {
  if (!phi_usable(phi)) throw DomainError("phi must be monic of degree >= 1");
  const PhiExpansion e = phi_expand(F, phi);
  if (e.top_index() < 1) throw DomainError("polynomial has no phi^n term with n >= 1");
  const long n = e.top_index();
  if (!e.terms.back().is_constant()) {
    throw DomainError("top phi-coefficient " + e.terms.back().to_string() + " is not an integer");
  }
  SchurInput in{phi, n, e.terms.back().coeff(0), {}};
  std::vector<Integer> bs(static_cast<std::size_t>(n) + 1, Integer(1));
  for (long j = n - 1; j >= 0; --j) bs[j] = bs[j + 1] * (j + 2);
  for (long j = 0; j < n; ++j) {
    std::vector<Integer> c(e.terms[j].coeffs().begin(), e.terms[j].coeffs().end());
    for (auto& x : c) {
      if (!mpz_divisible_p(x.get_mpz_t(), bs[j].get_mpz_t())) {
        throw DomainError("phi-coefficient " + std::to_string(j) + " is not divisible by (n+1)!/(j+1)! = " +
                          bs[j].get_str());
      }
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), bs[j].get_mpz_t());
    }
    in.a.emplace_back(std::move(c));
  }
  return in;
}

bool is_power_of_two_at_least_4(long m) { return m >= 4 && (m & (m - 1)) == 0; }

std::vector<HypothesisCheck> check_hypotheses(const SchurInput& in) {
  std::vector<HypothesisCheck> checks;
  const auto bound = static_cast<unsigned long>(std::max(in.n + 1, 1L));

  checks.push_back({"H1_n_ne_8", in.n != 8, "n = " + std::to_string(in.n)});

  {
    const long m = in.n + 1;
    std::string detail = "n+1 = " + std::to_string(m);
    if (is_power_of_two_at_least_4(m)) {
      long u = 0;
      for (long t = m; t > 1; t >>= 1) ++u;
      detail += " = 2^" + std::to_string(u);
    }
    checks.push_back({"H2_n_plus_1_not_power_of_2", !is_power_of_two_at_least_4(m), detail});
  }

  const bool monic = phi_usable(in.phi);
  checks.push_back({"H3_phi_monic", monic,
                    in.phi.is_zero() ? "phi = 0" : "leading coefficient " + in.phi.leading().get_str() +
                                                       ", degree " + std::to_string(in.phi.degree())});

  if (!monic) {
    checks.push_back({"H4_phi_irreducible_mod_small_primes", false, "not checked: phi is not monic of degree >= 1"});
  } else {
    const IrreducibilityReport r = irreducible_mod_all(in.phi, bound);
    checks.push_back({"H4_phi_irreducible_mod_small_primes", r.pass,
                      r.pass ? "irreducible modulo " + join_primes(r.primes_checked)
                             : "reducible modulo " + std::to_string(*r.failing_prime)});
  }

  {
    std::vector<unsigned long> bad;
    for (std::size_t j = 0; j < in.a.size(); ++j) {
      if (in.a[j].degree() >= in.phi.degree()) bad.push_back(j);
    }
    checks.push_back({"H5_deg_a_lt_deg_phi", bad.empty(),
                      bad.empty() ? "all a_j have degree < " + std::to_string(in.phi.degree())
                                  : "degree too large for j = " + join_primes(bad)});
  }

  {
    if (in.a.empty() || in.a.front().is_zero() || in.a_n == 0) {
      checks.push_back({"H6_content_coprime_to_small_primes", false, "a_n a_0(x) is zero"});
    } else {
      const Integer c = abs(in.a_n) * content(in.a.front());
      const auto p = small_prime_divisor(c, bound);
      checks.push_back({"H6_content_coprime_to_small_primes", !p.has_value(),
                        "content(a_n a_0) = " + c.get_str() +
                            (p ? ", divisible by " + std::to_string(*p) : "")});
    }
  }
  return checks;
}

std::optional<unsigned long> small_factor_exclusion(const SchurInput& in) {
  if (!phi_usable(in.phi) || in.n < 1) return std::nullopt;
  for (unsigned long p : prime_factors(static_cast<unsigned long>(in.n) + 1)) {
    if (mpz_divisible_ui_p(in.a_n.get_mpz_t(), p)) continue;
    if (rabin_irreducible(reduce(in.phi, p))) return p;
  }
  return std::nullopt;
}

unsigned long hanson_witness(long n, long k) {
  if (n < 4 || k < 2 || k > n / 2) {
    throw DomainError("hanson_witness: need n >= 4 and 2 <= k <= n/2, got (" + std::to_string(n) + ", " +
                      std::to_string(k) + ")");
  }
  std::optional<unsigned long> best;
  for (long i = 0; i < k; ++i) {
    for (unsigned long q : prime_factors(static_cast<unsigned long>(n + 1 - i))) {
      if (q >= static_cast<unsigned long>(k) + 2 && (!best || q < *best)) best = q;
    }
  }
  if (!best) throw NoWitness(n, k);
  return *best;
}

std::vector<std::string> exclusion_violations(const GeneralSchurInput& in, long k, unsigned long p) {
  std::vector<std::string> v;
  if (in.n < 1 || static_cast<long>(in.a.size()) != in.n + 1) {
    v.emplace_back("well_formed_input");
    return v;
  }
  if (k < 1 || k > in.n / 2) v.emplace_back("k_in_range");
  if (!is_prime(p)) {
    v.emplace_back("p_prime");
    return v;
  }
  if (k >= 0 && p < static_cast<unsigned long>(k) + 2) v.emplace_back("p_ge_k_plus_2");
  bool divides = false;
  for (long i = 0; i < std::max(k, 0L) && !divides; ++i) divides = (static_cast<unsigned long>(in.n + 1 - i) % p) == 0;
  if (!divides) v.emplace_back("p_divides_falling_product");
  const IntPoly& top = in.a.back();
  if (top.is_zero() || mpz_divisible_ui_p(top.leading().get_mpz_t(), p)) v.emplace_back("p_not_dividing_lc_a_n");

  const auto bound = static_cast<unsigned long>(in.n) + 1;
  if (!phi_usable(in.phi)) {
    v.emplace_back("phi_monic");
  } else {
    if (!irreducible_mod_all(in.phi, bound).pass) v.emplace_back("phi_irreducible_mod_small_primes");
    if (std::any_of(in.a.begin(), in.a.end(), [&](const IntPoly& a) { return a.degree() >= in.phi.degree(); })) {
      v.emplace_back("deg_a_lt_deg_phi");
    }
  }
  const IntPoly& a0 = in.a.front();
  if (a0.is_zero() || small_prime_divisor(content(a0), bound)) v.emplace_back("content_a0_coprime_to_small_primes");
  return v;
}

PrimeWitness exclude_band(const GeneralSchurInput& in, long k, unsigned long p) {
  auto v = exclusion_violations(in, k, p);
  if (!v.empty()) throw PreconditionError(std::move(v));
  return {k, p};
}

PrimeWitness exclude_band(const SchurInput& in, long k, unsigned long p) {
  return exclude_band(generalize(in), k, p);
}

Rational rightmost_slope(const GeneralSchurInput& in, unsigned long p) {
  const ScaledExpansion s = scaled_expansion(in);
  if (s.terms.front().is_zero()) throw DomainError("rightmost_slope: a_0 must be nonzero");
  const long y0 = static_cast<long>(vpx(s.terms.front(), p));
  std::optional<Rational> best;
  for (long j = 1; j <= in.n; ++j) {
    if (s.terms[j].is_zero()) continue;
    Rational slope(y0 - static_cast<long>(vpx(s.terms[j], p)), j);
    if (!best || *best < slope) best = slope;
  }
  if (!best) throw DomainError("rightmost_slope: no nonzero a_j with j >= 1");
  return *best;
}

Rational rightmost_slope(const SchurInput& in, unsigned long p) { return rightmost_slope(generalize(in), p); }

Certificate certify(const SchurInput& in, const CertifyOptions& options) {
  validate(in);
  Certificate cert;
  cert.n = in.n;
  cert.phi = in.phi;
  cert.checks = check_hypotheses(in);

  auto passed = [&](std::string_view prefix) {
    return std::any_of(cert.checks.begin(), cert.checks.end(),
                       [&](const HypothesisCheck& c) { return c.name.starts_with(prefix) && c.pass; });
  };
  const bool structural = passed("H3") && passed("H4") && passed("H5") && passed("H6");
  if (!structural) {
    cert.verdict = Verdict::hypotheses_not_met;
    return cert;
  }

  const long deg_phi = in.phi.degree();
  const GeneralSchurInput general = generalize(in);

  cert.small_factor_prime = small_factor_exclusion(in);
  if (cert.small_factor_prime && deg_phi > 1) cert.excluded_intervals.push_back({1, deg_phi});

  std::vector<long> gaps;
  for (long k = 1; k <= in.n / 2; ++k) {
    std::optional<unsigned long> p;
    if (k == 1) {
      for (unsigned long q : prime_factors(static_cast<unsigned long>(in.n) + 1)) {
        if (q % 2 == 1) {
          p = q;
          break;
        }
      }
    } else {
      try {
        p = hanson_witness(in.n, k);
      } catch (const NoWitness&) {
      }
    }
    if (!p || !exclusion_violations(general, k, *p).empty()) {
      gaps.push_back(k);
      continue;
    }
    if (!(rightmost_slope(general, *p) < Rational(1, k))) {
      throw std::logic_error("rightmost slope bound violated for witness k=" + std::to_string(k));
    }
    cert.witnesses.push_back(exclude_band(general, k, *p));
    cert.excluded_intervals.push_back(band(k, deg_phi));
  }

  const bool no_exceptional_shape = passed("H1") && passed("H2");
  if (no_exceptional_shape) {
    if (!gaps.empty() || !cert.small_factor_prime) {
      throw std::logic_error("hypotheses hold but an exclusion is missing");
    }
    cert.verdict = Verdict::irreducible;
    return cert;
  }

  cert.remark = in.n == 8 ? RemarkCase::n_equals_8 : RemarkCase::n_plus_1_power_of_two;
  if (gaps.size() == 1 && cert.small_factor_prime) cert.residual_interval = band(gaps.front(), deg_phi);

  std::optional<Verdict> decided;
  if (options.use_oracle && cert.residual_interval) {
    const IntPoly F = primitive_part(scaled_expansion(in).assemble());
    FactorSearchBudget budget;
    budget.min_degree = std::max(cert.residual_interval->lo, 1L);
    budget.max_degree = std::min(cert.residual_interval->hi - 1, F.degree() / 2);
    budget.candidate_cap = options.candidate_cap;
    HypothesisCheck oracle{"oracle_residual_interval", false, ""};
    if (budget.max_degree < budget.min_degree) {
      oracle.pass = true;
      oracle.detail = "residual interval lies above deg F / 2";
      decided = Verdict::irreducible;
    } else {
      try {
        if (auto factor = bounded_factor_search(F, budget)) {
          oracle.detail = "factor found: " + factor->to_string();
          decided = Verdict::hypotheses_not_met;
        } else {
          oracle.pass = true;
          oracle.detail = "no factor with degree in [" + std::to_string(budget.min_degree) + ", " +
                          std::to_string(budget.max_degree) + "]";
          decided = Verdict::irreducible;
        }
      } catch (const BudgetExceeded& e) {
        oracle.detail = std::string("search refused: ") + e.what();
      }
    }
    cert.checks.push_back(std::move(oracle));
  }

  if (decided) {
    cert.verdict = *decided;
  } else {
    // The reduction only counts as progress when some band was actually excluded.
    cert.verdict = cert.witnesses.empty() ? Verdict::hypotheses_not_met : Verdict::remark_case_open;
  }
  return cert;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::irreducible:
      return "IRREDUCIBLE";
    case Verdict::hypotheses_not_met:
      return "HYPOTHESES_NOT_MET";
    case Verdict::remark_case_open:
      return "REMARK_CASE_OPEN";
  }
  return "";
}

std::string to_string(RemarkCase r) {
  switch (r) {
    case RemarkCase::none:
      return "none";
    case RemarkCase::n_plus_1_power_of_two:
      return "n_plus_1_power_of_two";
    case RemarkCase::n_equals_8:
      return "n_equals_8";
  }
  return "";
}

}  // namespace phinewton
