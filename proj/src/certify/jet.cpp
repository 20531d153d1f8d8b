#include "sinc/certify/jet.hpp"

#include <algorithm>

#include "sinc/errors.hpp"

namespace sinc::certify {

Jet::Jet(std::vector<Enclosure> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("empty jet");
}

Jet Jet::constant(const Enclosure& v, int order) {
  std::vector<Enclosure> c(order + 1, Enclosure::from_integer(0, v.precision()));
  c[0] = v;
  return Jet(std::move(c));
}

Jet Jet::variable(const Enclosure& x0, int order) {
  Jet j = constant(x0, order);
  if (order >= 1) j.c_[1] = Enclosure::from_integer(1, x0.precision());
  return j;
}

namespace {

// k-th derivative of sin at x0 from (sin x0, cos x0): sin, cos, -sin, -cos, ...
Jet trig_shifted(const Enclosure& sin0, const Enclosure& cos0, const Rational& s, int order, int phase) {
  std::vector<Enclosure> c;
  Rational scale(1);
  for (int k = 0; k <= order; ++k) {
    const int r = (k + phase) % 4;
    const Enclosure& base = (r % 2 == 0) ? sin0 : cos0;
    const Enclosure d = r >= 2 ? -base : base;
    c.push_back(d * scale);
    scale = scale * s / Rational(k + 1);
  }
  return Jet(std::move(c));
}

}  // namespace

Jet Jet::sin_shifted(const Enclosure& sin0, const Enclosure& cos0, const Rational& s, int order) {
  return trig_shifted(sin0, cos0, s, order, 0);
}

Jet Jet::cos_shifted(const Enclosure& sin0, const Enclosure& cos0, const Rational& s, int order) {
  return trig_shifted(sin0, cos0, s, order, 1);
}

Enclosure Jet::derivative(int j) const { return c_.at(j) * Rational(exactnum::factorial(static_cast<unsigned>(j)), mpz_class(1)); }

Jet operator+(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Enclosure> c;
  for (int i = 0; i <= n; ++i) c.push_back(a[i] + b[i]);
  return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Enclosure> c;
  for (int i = 0; i <= n; ++i) c.push_back(a[i] - b[i]);
  return Jet(std::move(c));
}

Jet operator*(const Jet& a, const Jet& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Enclosure> c;
  for (int k = 0; k <= n; ++k) {
    Enclosure s = a[0] * b[k];
    for (int i = 1; i <= k; ++i) s += a[i] * b[k - i];
    c.push_back(std::move(s));
  }
  return Jet(std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b[0].contains_zero()) throw DomainError("jet division by a series whose constant term may vanish");
  const int n = std::min(a.order(), b.order());
  std::vector<Enclosure> q;
  for (int k = 0; k <= n; ++k) {
    Enclosure s = a[k];
    for (int i = 0; i < k; ++i) s -= q[i] * b[k - i];
    q.push_back(s / b[0]);
  }
  return Jet(std::move(q));
}

Jet operator*(const Rational& s, const Jet& a) {
  std::vector<Enclosure> c;
  for (int i = 0; i <= a.order(); ++i) c.push_back(a[i] * s);
  return Jet(std::move(c));
}

}  // namespace sinc::certify
