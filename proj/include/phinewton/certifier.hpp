#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phinewton/int_poly.hpp"
#include "phinewton/rational.hpp"

namespace phinewton {

/// f = a_n phi^n / (n+1)! + sum_{j<n} a_j(x) phi^j / (j+1)! with integer a_n.
struct SchurInput {
  IntPoly phi;
  long n = 0;
  Integer a_n;
  std::vector<IntPoly> a;  // a_0 .. a_{n-1}
};

/// Same shape with a polynomial top coefficient a_n(x); a holds a_0 .. a_n.
struct GeneralSchurInput {
  IntPoly phi;
  long n = 0;
  std::vector<IntPoly> a;
};

GeneralSchurInput generalize(const SchurInput& in);

/// Throws DomainError when the input is structurally unusable
/// (n < 1, wrong number of a_j, a_n = 0, a_0 = 0, deg phi < 1).
void validate(const SchurInput& in);

/// b_j = (n+1)!/(j+1)! and the products b_j a_j(x); sum_j terms[j] phi^j = (n+1)! f.
struct ScaledExpansion {
  std::vector<Integer> b;
  std::vector<IntPoly> terms;
  IntPoly phi;

  PhiExpansion as_expansion() const { return {phi, terms}; }
  IntPoly assemble() const { return phi_assemble(as_expansion()); }
};

ScaledExpansion scaled_expansion(const SchurInput& in);
ScaledExpansion scaled_expansion(const GeneralSchurInput& in);

/// Recovers the Schur form from F = (n+1)! f and phi. Throws DomainError if
/// the top phi-coefficient is not constant or some b_j does not divide the
/// j-th phi-coefficient.
SchurInput schur_input_from_scaled(const IntPoly& F, const IntPoly& phi);

struct HypothesisCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// H1 n != 8, H2 n+1 not 2^u (u >= 2), H3 phi monic, H4 phi irreducible mod
/// every prime <= n+1, H5 deg a_j < deg phi, H6 no prime <= n+1 divides
/// content(a_n a_0).
std::vector<HypothesisCheck> check_hypotheses(const SchurInput& in);

bool is_power_of_two_at_least_4(long m);

/// Smallest prime p | n+1 with phi irreducible mod p and p not dividing a_n.
std::optional<unsigned long> small_factor_exclusion(const SchurInput& in);

/// Smallest prime p >= k+2 dividing (n+1) n ... (n-k+2). Throws NoWitness
/// for (8, 2), the single exception, and DomainError outside n >= 4,
/// 2 <= k <= n/2.
unsigned long hanson_witness(long n, long k);

/// Exhaustive witness scan over n in [n_lo, n_hi], 2 <= k <= n/2. Returns
/// every (n, k) without a witness, ordered by n then k. Work is split into
/// `threads` chunks; the result does not depend on the split.
std::vector<std::pair<long, long>> hanson_scan(long n_lo, long n_hi, unsigned threads = 1);

struct PrimeWitness {
  long k = 0;
  unsigned long p = 0;
  friend bool operator==(const PrimeWitness&, const PrimeWitness&) = default;
};

/// Names of the violated preconditions for excluding factor degrees in
/// [k deg phi, (k+1) deg phi) with prime p; empty when the exclusion applies.
std::vector<std::string> exclusion_violations(const GeneralSchurInput& in, long k, unsigned long p);

/// Validated witness; throws PreconditionError listing each violation.
PrimeWitness exclude_band(const GeneralSchurInput& in, long k, unsigned long p);
PrimeWitness exclude_band(const SchurInput& in, long k, unsigned long p);

/// max over 1 <= j <= n, a_j != 0, of (v(b_0 a_0) - v(b_j a_j)) / j, where v is
/// the Gauss valuation at p.
Rational rightmost_slope(const GeneralSchurInput& in, unsigned long p);
Rational rightmost_slope(const SchurInput& in, unsigned long p);

enum class Verdict { irreducible, hypotheses_not_met, remark_case_open };
enum class RemarkCase { none, n_plus_1_power_of_two, n_equals_8 };

/// Half-open degree range [lo, hi).
struct DegreeInterval {
  long lo = 0;
  long hi = 0;
  friend bool operator==(const DegreeInterval&, const DegreeInterval&) = default;
};

struct Certificate {
  Verdict verdict = Verdict::hypotheses_not_met;
  long n = 0;
  IntPoly phi;
  std::vector<HypothesisCheck> checks;
  std::optional<unsigned long> small_factor_prime;
  std::vector<PrimeWitness> witnesses;
  std::vector<DegreeInterval> excluded_intervals;
  RemarkCase remark = RemarkCase::none;
  std::optional<DegreeInterval> residual_interval;
};

struct CertifyOptions {
  /// Try to close the residual interval of the n+1 = 2^u / n = 8 cases by
  /// bounded factor search.
  bool use_oracle = false;
  std::uint64_t candidate_cap = 10'000'000;
};

Certificate certify(const SchurInput& in, const CertifyOptions& options = {});

std::string to_string(Verdict v);
std::string to_string(RemarkCase r);

}  // namespace phinewton
