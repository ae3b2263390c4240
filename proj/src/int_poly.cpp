#include "phinewton/int_poly.hpp"

#include <algorithm>

#include "phinewton/errors.hpp"

namespace phinewton {

namespace {
const Integer kZero{0};
}

Integer parse_integer(const std::string& text) {
  Integer z;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not a decimal integer: '" + text + "'");
  }
  std::string normalized = text.front() == '+' ? text.substr(1) : text;
  if (z.set_str(normalized, 10) != 0) throw DomainError("not a decimal integer: '" + text + "'");
  return z;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::monomial(Integer c, std::size_t exponent) {
  std::vector<Integer> v(exponent + 1);
  v[exponent] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_longs(std::initializer_list<long> coeffs) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'x';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

IntPoly add(const IntPoly& f, const IntPoly& g) { return f + g; }

IntPoly mul(const IntPoly& f, const IntPoly& g) { return f * g; }

IntPoly pow(const IntPoly& f, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

DivRem divrem_monic(const IntPoly& f, const IntPoly& d) {
  if (d.degree() < 1) throw DomainError("divrem_monic: divisor must have degree >= 1");
  if (!d.is_monic()) throw DomainError("divrem_monic: divisor must be monic");
  const long dd = d.degree();
  if (f.degree() < dd) return {IntPoly{}, f};

  std::vector<Integer> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Integer> quo(static_cast<std::size_t>(f.degree() - dd + 1));
  const auto dc = d.coeffs();
  for (long k = f.degree(); k >= dd; --k) {
    const Integer q = rem[k];
    if (q == 0) continue;
    const long shift = k - dd;
    quo[shift] = q;
    for (long i = 0; i <= dd; ++i) {
      mpz_submul(rem[shift + i].get_mpz_t(), q.get_mpz_t(), dc[i].get_mpz_t());
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

Integer content(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("content of the zero polynomial");
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  const Integer c = content(f);
  std::vector<Integer> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

Integer evaluate(const IntPoly& f, const Integer& x0) {
  Integer acc = 0;
  const auto c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= x0;
    acc += c[k];
  }
  return acc;
}

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi) {
  if (phi.degree() < 1 || !phi.is_monic()) throw DomainError("phi_expand: phi must be monic of degree >= 1");
  PhiExpansion e{phi, {}};
  IntPoly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divrem_monic(rest, phi);
    e.terms.push_back(std::move(r));
    rest = std::move(q);
  }
  return e;
}

IntPoly phi_assemble(const PhiExpansion& e) {
  // Horner in phi.
  IntPoly acc;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    acc = acc * e.phi + *it;
  }
  return acc;
}

}  // namespace phinewton
