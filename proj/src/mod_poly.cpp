#include "phinewton/mod_poly.hpp"

#include <algorithm>

#include "phinewton/errors.hpp"
#include "phinewton/primes.hpp"

namespace phinewton {

namespace {

constexpr unsigned long kMaxModulus = 1UL << 32;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw DomainError("modulus mismatch between F_p polynomials");
}

void trim(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPoly mod_pow_x(unsigned long base_exp, const ModPoly& current, const ModPoly& m) {
  // current^base_exp mod m by square-and-multiply.
  ModPoly result = ModPoly::constant(m.modulus(), 1);
  result = mod_rem(result, m);
  ModPoly b = current;
  unsigned long e = base_exp;
  while (e > 0) {
    if (e & 1UL) result = mod_mul(result, b, m);
    e >>= 1UL;
    if (e > 0) b = mod_mul(b, b, m);
  }
  return result;
}

}  // namespace

ModPoly::ModPoly(unsigned long p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2 || p >= kMaxModulus) throw DomainError("modulus must be a prime below 2^32");
  for (auto& x : c_) x %= p_;
  trim(c_);
}

std::uint64_t ModPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

ModPoly reduce(const IntPoly& f, unsigned long p) {
  if (p >= kMaxModulus || !is_prime(p)) throw DomainError("reduce: modulus " + std::to_string(p) + " is not a prime below 2^32");
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(mpz_fdiv_ui(x.get_mpz_t(), p));
  return ModPoly(p, std::move(c));
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  const auto p = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % p;
  return ModPoly(p, std::move(c));
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  const auto p = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + p - b.coeff(i)) % p;
  return ModPoly(p, std::move(c));
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.modulus());
  const auto p = a.modulus();
  std::vector<std::uint64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = (c[i + j] + mul_mod(a.coeffs()[i], b.coeffs()[j], p)) % p;
    }
  }
  return ModPoly(p, std::move(c));
}

ModPoly mod_rem(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial over F_p");
  const auto p = a.modulus();
  std::vector<std::uint64_t> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const std::uint64_t inv_lead = inv_mod(d.back(), p);
  while (r.size() > db && !r.empty()) {
    const std::size_t shift = r.size() - 1 - db;
    const std::uint64_t q = mul_mod(r.back(), inv_lead, p);
    for (std::size_t i = 0; i <= db; ++i) {
      r[shift + i] = (r[shift + i] + p - mul_mod(q, d[i], p)) % p;
    }
    trim(r);
  }
  return ModPoly(p, std::move(r));
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m) {
  require_same_modulus(a, b);
  require_same_modulus(a, m);
  if (m.degree() < 1 || !m.is_monic()) throw DomainError("mod_mul: modulus polynomial must be monic of degree >= 1");
  return mod_rem(mod_mul(a, b), m);
}

ModPoly make_monic(const ModPoly& a) {
  if (a.is_zero()) return a;
  const auto p = a.modulus();
  const std::uint64_t inv = inv_mod(a.leading(), p);
  std::vector<std::uint64_t> c = a.coeffs();
  for (auto& x : c) x = mul_mod(x, inv, p);
  return ModPoly(p, std::move(c));
}

ModPoly mod_gcd(ModPoly a, ModPoly b) {
  require_same_modulus(a, b);
  while (!b.is_zero()) {
    ModPoly r = mod_rem(a, b);
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

ModPoly frobenius_power(const ModPoly& m, unsigned long e) {
  if (m.degree() < 1 || !m.is_monic()) throw DomainError("frobenius_power: modulus polynomial must be monic of degree >= 1");
  ModPoly current = mod_rem(ModPoly::x(m.modulus()), m);
  for (unsigned long i = 0; i < e; ++i) current = mod_pow_x(m.modulus(), current, m);
  return current;
}

bool rabin_irreducible(const ModPoly& f) {
  if (f.degree() < 1) throw DomainError("rabin_irreducible: constant polynomial");
  const ModPoly m = make_monic(f);
  const auto d = static_cast<unsigned long>(m.degree());
  if (d == 1) return true;
  const ModPoly x = ModPoly::x(m.modulus());
  if (frobenius_power(m, d) != mod_rem(x, m)) return false;
  for (unsigned long q : prime_factors(d)) {
    const ModPoly diff = mod_sub(frobenius_power(m, d / q), x);
    if (mod_gcd(m, diff).degree() != 0) return false;
  }
  return true;
}

bool naive_irreducible(const ModPoly& f) {
  const auto p = f.modulus();
  if (f.degree() < 1) throw DomainError("naive_irreducible: constant polynomial");
  if (p > 7 || f.degree() > 8) throw DomainError("naive_irreducible: enumeration guard requires p <= 7 and deg <= 8");
  const long half = f.degree() / 2;
  for (long d = 1; d <= half; ++d) {
    // Odometer over the d low coefficients of a monic candidate.
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
    c[d] = 1;
    while (true) {
      if (mod_rem(f, ModPoly(p, c)).is_zero()) return false;
      long i = 0;
      while (i < d && ++c[i] == p) c[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

IrreducibilityReport irreducible_mod_all(const IntPoly& phi, unsigned long bound) {
  if (phi.degree() < 1 || !phi.is_monic()) throw DomainError("irreducible_mod_all: phi must be monic of degree >= 1");
  IrreducibilityReport report;
  for (unsigned long p : primes_up_to(bound)) {
    report.primes_checked.push_back(p);
    if (!rabin_irreducible(reduce(phi, p))) {
      report.pass = false;
      report.failing_prime = p;
      break;
    }
  }
  return report;
}

}  // namespace phinewton
