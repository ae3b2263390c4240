#pragma once

#include <compare>
#include <string>

#include "phinewton/errors.hpp"
#include "phinewton/integer.hpp"

namespace phinewton {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Integer num, Integer den = 1) {  // NOLINT(google-explicit-constructor)
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
  }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.q_ == 0) throw DomainError("rational division by zero");
    return wrap(a.q_ / b.q_);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  int sign() const { return sgn(q_); }

  /// Always "num/den", also for integers ("1/1", "0/1").
  std::string to_string() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    r.q_.canonicalize();
    return r;
  }
  mpq_class q_{0};
};

}  // namespace phinewton
