#pragma once

#include <vector>

#include "sinc/exactnum/enclosure.hpp"

namespace sinc::certify {

using exactnum::Enclosure;
using exactnum::Rational;

/// Truncated Taylor series sum_{i<=order} c_i t^i with enclosure coefficients.
class Jet {
 public:
  explicit Jet(std::vector<Enclosure> coeffs);

  static Jet constant(const Enclosure& v, int order);
  /// x0 + t
  static Jet variable(const Enclosure& x0, int order);
  /// sin(x0 + s t) and cos(x0 + s t) from enclosures of sin x0, cos x0.
  static Jet sin_shifted(const Enclosure& sin0, const Enclosure& cos0, const Rational& s, int order);
  static Jet cos_shifted(const Enclosure& sin0, const Enclosure& cos0, const Rational& s, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Enclosure& operator[](int i) const { return c_.at(i); }

  /// j-th derivative at t = 0, i.e. j! c_j.
  Enclosure derivative(int j) const;

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  /// Throws DomainError when b's constant term contains zero.
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator*(const Rational& s, const Jet& a);

 private:
  std::vector<Enclosure> c_;
};

}  // namespace sinc::certify
