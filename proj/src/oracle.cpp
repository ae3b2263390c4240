#include "phinewton/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "phinewton/errors.hpp"

namespace phinewton {

namespace {

long effective_max_degree(const IntPoly& f, const FactorSearchBudget& budget) {
  return std::min(budget.max_degree, f.degree() - 1);
}

Integer coeff_bound_for(const IntPoly& f, const FactorSearchBudget& budget, long d) {
  return budget.coeff_bound ? *budget.coeff_bound : mignotte_bound(f, d);
}

// Exact division over Z; false when g does not divide f.
bool divides_exactly(const IntPoly& f, const IntPoly& g) {
  if (f.degree() < g.degree()) return f.is_zero();
  std::vector<Integer> rem(f.coeffs().begin(), f.coeffs().end());
  const auto gc = g.coeffs();
  const long dg = g.degree();
  const Integer& lead = g.leading();
  Integer q;
  for (long k = f.degree(); k >= dg; --k) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), rem[k].get_mpz_t(), lead.get_mpz_t());
    for (long i = 0; i <= dg; ++i) mpz_submul(rem[k - dg + i].get_mpz_t(), q.get_mpz_t(), gc[i].get_mpz_t());
  }
  return std::all_of(rem.begin(), rem.end(), [](const Integer& c) { return c == 0; });
}

// Necessary condition g(a) | f(a) for a in {0, 1, -1}; f(a) = 0 imposes nothing.
bool value_divides(const Integer& fa, std::int64_t ga) {
  if (fa == 0) return true;
  if (ga == 0) return false;
  const auto mag = static_cast<unsigned long>(ga < 0 ? -ga : ga);
  return mpz_divisible_ui_p(fa.get_mpz_t(), mag) != 0;
}

}  // namespace

Integer mignotte_bound(const IntPoly& f, long d) {
  if (f.is_zero()) throw DomainError("mignotte_bound: zero polynomial");
  if (d < 1 || d > f.degree()) throw DomainError("mignotte_bound: need 1 <= d <= deg f");
  Integer norm_sq = 0;
  for (const auto& c : f.coeffs()) norm_sq += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm_sq.get_mpz_t());
  if (root * root < norm_sq) root += 1;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(d));
  return scale * root;
}

Integer search_space_size(const IntPoly& f, const FactorSearchBudget& budget) {
  if (f.is_zero()) throw DomainError("factor search on the zero polynomial");
  const Integer lead_choices = static_cast<unsigned long>(positive_divisors(f.leading()).size());
  Integer total = 0;
  for (long d = std::max(budget.min_degree, 1L); d <= effective_max_degree(f, budget); ++d) {
    const Integer width = 2 * coeff_bound_for(f, budget, d) + 1;
    Integer per;
    mpz_pow_ui(per.get_mpz_t(), width.get_mpz_t(), static_cast<unsigned long>(d));
    total += lead_choices * per;
  }
  return total;
}

std::optional<IntPoly> bounded_factor_search(const IntPoly& f, const FactorSearchBudget& budget) {
  if (f.is_zero()) throw DomainError("factor search on the zero polynomial");
  if (content(f) != 1) throw DomainError("bounded_factor_search: input must be primitive");
  const Integer size = search_space_size(f, budget);
  if (size > Integer(static_cast<unsigned long>(budget.candidate_cap))) {
    throw BudgetExceeded("search space of " + size.get_str() + " candidates exceeds cap " +
                         std::to_string(budget.candidate_cap));
  }

  // Enumeration runs in 64-bit arithmetic; sums of d + 1 coefficients must not overflow.
  const Integer machine_limit = Integer(1) << 40;
  for (long d = std::max(budget.min_degree, 1L); d <= effective_max_degree(f, budget); ++d) {
    if (coeff_bound_for(f, budget, d) >= machine_limit) throw BudgetExceeded("coefficient bound too large to enumerate");
  }
  if (abs(f.leading()) >= machine_limit) throw BudgetExceeded("leading coefficient too large to enumerate");

  const Integer f0 = evaluate(f, 0);
  const Integer f1 = evaluate(f, 1);
  const Integer fm1 = evaluate(f, -1);
  const auto leads = positive_divisors(f.leading());

  for (long d = std::max(budget.min_degree, 1L); d <= effective_max_degree(f, budget); ++d) {
    const std::int64_t bound = coeff_bound_for(f, budget, d).get_si();
    for (const Integer& lead_big : leads) {
      const std::int64_t lead = lead_big.get_si();
      // c[0..d-1]; c[d-1] is the most significant digit of the odometer.
      std::vector<std::int64_t> c(static_cast<std::size_t>(d), -bound);
      while (true) {
        std::int64_t at1 = lead;
        std::int64_t atm1 = (d % 2 == 0) ? lead : -lead;
        for (long i = 0; i < d; ++i) {
          at1 += c[i];
          atm1 += (i % 2 == 0) ? c[i] : -c[i];
        }
        if (value_divides(f0, c[0]) && value_divides(f1, at1) && value_divides(fm1, atm1)) {
          std::vector<Integer> coeffs(c.begin(), c.end());
          coeffs.emplace_back(lead);
          IntPoly g(std::move(coeffs));
          if (divides_exactly(f, g)) return g;
        }
        long i = 0;
        while (i < d && c[i] == bound) c[i++] = -bound;
        if (i == d) break;
        ++c[i];
      }
    }
  }
  return std::nullopt;
}

std::vector<Integer> positive_divisors(const Integer& m) {
  if (m == 0) throw DomainError("divisors of zero");
  Integer rest = abs(m);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer q = 2; q * q <= rest; ++q) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
      rest /= q;
      ++e;
    }
    if (e) factors.emplace_back(q, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [q, e] : factors) {
    const std::size_t base = divs.size();
    Integer power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= q;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Rational> rational_roots(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (f.coeff(shift) == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  std::vector<Integer> rest(f.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), f.coeffs().end());
  const IntPoly g(std::move(rest));
  const long d = g.degree();
  if (d >= 1) {
    const auto nums = positive_divisors(g.coeff(0));
    const auto dens = positive_divisors(g.leading());
    for (const auto& v : dens) {
      for (const auto& u : nums) {
        Integer common;
        mpz_gcd(common.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        if (common != 1) continue;
        for (int sign : {1, -1}) {
          const Integer num = sign * u;
          // v^d g(num / v) = sum_i g_i num^i v^(d-i)
          Integer acc = 0;
          for (long i = d; i >= 0; --i) {
            acc *= num;
            Integer vp;
            mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(d - i));
            acc += g.coeff(static_cast<std::size_t>(i)) * vp;
          }
          if (acc == 0) roots.emplace_back(num, v);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool verify_factorization(const IntPoly& f, std::span<const IntPoly> factors) {
  IntPoly product = IntPoly::constant(1);
  for (const auto& g : factors) product = product * g;
  return product == f;
}

}  // namespace phinewton
