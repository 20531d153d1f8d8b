#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sinc::exactnum {

/// Exact fraction in lowest terms with a positive denominator.
///
/// Every arithmetic operation is exact; dividing by zero throws DomainError
/// instead of producing a value.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  /// Parses "7/4", "-3", "1.505" or "1e-6" exactly. Decimals are never routed
  /// through binary floating point.
  static Rational parse(std::string_view text);

  const mpq_class& get() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(unsigned exponent) const;

  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// 2^exponent as an exact rational (negative exponents allowed).
Rational power_of_two(long exponent);

/// n! as an exact integer.
mpz_class factorial(unsigned n);

/// Binomial coefficient C(n, k).
mpz_class binomial(unsigned n, unsigned k);

}  // namespace sinc::exactnum
