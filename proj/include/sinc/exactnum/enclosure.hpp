#pragma once

#include <optional>
#include <string>

#include "sinc/exactnum/big_float.hpp"
#include "sinc/exactnum/rational.hpp"

namespace sinc::exactnum {

/// Closed interval [lo, hi] with outward-rounded MPFR endpoints.
///
/// Every operation returns an enclosure of the exact image of its operands.
/// Binary operations work at the larger of the two operand precisions.
class Enclosure {
 public:
  /// Requires lo <= hi (DomainError otherwise). Precision is taken from lo.
  Enclosure(BigFloat lo, BigFloat hi);

  static Enclosure from_rational(const Rational& q, Precision precision);
  static Enclosure from_integer(long v, Precision precision);
  /// Degenerate interval at an existing float.
  static Enclosure point(const BigFloat& v);
  /// Interval hull of two floats given in either order.
  static Enclosure spanning(const BigFloat& a, const BigFloat& b);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  Precision precision() const { return lo_.precision(); }

  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains_zero() const { return !is_positive() && !is_negative(); }
  bool is_exact_zero() const { return mpfr_zero_p(lo_.get()) && mpfr_zero_p(hi_.get()); }
  bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }
  /// +1 / -1 when the whole interval is strictly on one side of zero.
  std::optional<int> strict_sign() const;

  bool contains(const Rational& q) const;
  bool contains(const Enclosure& inner) const;

  /// Upper bound on hi - lo.
  BigFloat width() const;
  /// Nearest float to (lo + hi) / 2; always inside the interval.
  BigFloat midpoint() const;
  /// max(|lo|, |hi|), rounded up.
  BigFloat magnitude() const;
  /// min |t| over the interval, rounded down (zero if it straddles zero).
  BigFloat mignitude() const;

  /// Same set re-rounded outward to a new precision.
  Enclosure rounded_to(Precision precision) const;

  double lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
  double mid_double() const { return midpoint().to_double(); }

  std::string to_string(int digits = 20) const;

  Enclosure operator-() const;
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  /// Throws DomainError when the divisor contains zero.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

  friend Enclosure operator+(const Enclosure& a, const Rational& b);
  friend Enclosure operator-(const Enclosure& a, const Rational& b);
  friend Enclosure operator*(const Enclosure& a, const Rational& b);
  friend Enclosure operator/(const Enclosure& a, const Rational& b);
  friend Enclosure operator*(const Rational& a, const Enclosure& b) { return b * a; }
  friend Enclosure operator+(const Rational& a, const Enclosure& b) { return b + a; }
  friend Enclosure operator-(const Rational& a, const Enclosure& b) { return -(b - a); }

  Enclosure& operator+=(const Enclosure& b) { return *this = *this + b; }
  Enclosure& operator-=(const Enclosure& b) { return *this = *this - b; }
  Enclosure& operator*=(const Enclosure& b) { return *this = *this * b; }

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Enclosure square(const Enclosure& x);
Enclosure pow(const Enclosure& x, unsigned n);
/// Requires lo >= 0.
Enclosure sqrt(const Enclosure& x);
Enclosure abs(const Enclosure& x);
/// Exact scaling by 2^k.
Enclosure ldexp(const Enclosure& x, long k);
Enclosure hull(const Enclosure& a, const Enclosure& b);
/// Intersection; DomainError if disjoint.
Enclosure intersect(const Enclosure& a, const Enclosure& b);

/// a.hi < b.lo
bool certainly_less(const Enclosure& a, const Enclosure& b);
bool certainly_less(const Enclosure& a, const Rational& b);
bool certainly_greater(const Enclosure& a, const Rational& b);

/// Outward-rounded enclosure of a rational.
BigFloat round_down(const Rational& q, Precision precision);
BigFloat round_up(const Rational& q, Precision precision);

/// Exact conversion of a float to a rational.
Rational to_rational(const BigFloat& v);

}  // namespace sinc::exactnum
