#include "sinc/certify/theorems.hpp"

#include "sinc/certify/f_a.hpp"
#include "sinc/envelope/builders.hpp"
#include "sinc/errors.hpp"
#include "sinc/series/coefficients.hpp"
#include "sinc/series/series_spec.hpp"

namespace sinc::certify {

using exactnum::pi_enclosure;
using exactnum::to_rational;
using series::E_coeff;

void TheoremReport::add(Check c) {
  status = combine(status, c.status);
  checks.push_back(std::move(c));
}

void TheoremReport::add(SignCertificate cert, EnvelopePolynomial poly) {
  status = combine(status, cert.status);
  certificates.push_back(std::move(cert));
  polynomials.push_back(std::move(poly));
}

namespace {

Status of(bool ok) { return ok ? Status::Proven : Status::Inconclusive; }

// Rational points spread over (lo, hi) excluding the ends.
std::vector<Rational> spread(const Rational& lo, const Rational& hi, int count) {
  std::vector<Rational> out;
  for (int i = 1; i <= count; ++i) out.push_back(lo + (hi - lo) * Rational(i, count + 1));
  return out;
}

}  // namespace

TheoremReport prove_theorem4(int samples, Precision precision) {
  if (samples < 1) throw DomainError("samples must be positive");
  TheoremReport r(4);
  const Rational a(3, 2);
  r.add({"E_1(3/2) = 0", of(E_coeff(a, 1).is_zero()), "exact"});
  bool pos = true;
  for (int k = 2; k <= 50; ++k) pos = pos && E_coeff(a, k).sign() > 0;
  r.add({"E_k(3/2) > 0, 2 <= k <= 50", of(pos), "exact; beyond k = 50 the factor 4^k/2 - 2 stays positive"});
  int good = 0;
  for (int i = 0; i < samples; ++i) {
    const Rational x = Rational(1, 100) + Rational(312, 100) * Rational(i, std::max(1, samples - 1));
    if (eval_f_a(a, Enclosure::from_rational(x, precision)).is_positive()) ++good;
  }
  r.add({"f_{3/2}(x) > 0 at samples", of(good == samples),
         std::to_string(good) + "/" + std::to_string(samples) + " points in [0.01, 3.13]"});
  return r;
}

TheoremReport prove_theorem5(int samples, const SignOptions& options) {
  if (samples < 1) throw DomainError("samples must be positive");
  TheoremReport r(5);
  const Precision p = options.precision;
  const Enclosure half_pi = ldexp(pi_enclosure(p), -1);
  // t - sin t >= t^3 (1/6 - t^2/120) for t >= 0, so positivity of the
  // quadratic gives sin(x/2) < x/2 on (0, pi)
  envelope::EnvelopePolynomial q("1/6 - t^2/120", envelope::Side::Lower, half_pi,
                                 {{0, Enclosure::from_rational(Rational(1, 6), p)},
                                  {2, Enclosure::from_rational(Rational(-1, 120), p)}});
  SignCertificate cert = certify_sign(q, Enclosure::from_integer(0, p), half_pi, Sign::Positive, options);
  r.add(std::move(cert), std::move(q));

  int good = 0;
  const Rational top = to_rational(pi_enclosure(p).lo());
  for (const auto& x : spread(Rational(0), top, samples)) {
    const Enclosure xe = Enclosure::from_rational(x, p);
    const bool half = certainly_less(exactnum::sin_value(ldexp(xe, -1)), ldexp(xe, -1));
    const bool f2 = eval_f_a(Rational(2), xe).is_negative();
    const bool f3 = eval_f_a(Rational(3), xe).is_negative();
    if (half && f2 && f3) ++good;
  }
  r.add({"sin(x/2) < x/2 and f_2, f_3 < 0 at samples", of(good == samples),
         std::to_string(good) + "/" + std::to_string(samples) + " points in (0, pi)"});
  r.add({"a > 2 reduction", Status::Proven, "0 < sin x/x < 1 on (0, pi), so (sin x/x)^a <= (sin x/x)^2"});
  return r;
}

TheoremReport prove_theorem7(const Theorem7Options& o) {
  if (o.hi > o.c || o.hi.sign() <= 0) throw DomainError("theorem 7 interval must lie inside (0, c]");
  TheoremReport r(7);
  const Precision p = o.sign.precision;
  const Enclosure c = Enclosure::from_rational(o.c, p);
  const Enclosure zero = Enclosure::from_integer(0, p);
  const Enclosure hi = Enclosure::from_rational(o.hi, p);
  auto h1 = envelope::build_H1(o.m1, o.n1, c, p);
  auto c1 = certify_sign(h1, zero, hi, Sign::Negative, o.sign);
  c1.target = "H1";
  r.add(std::move(c1), std::move(h1));
  auto h2 = envelope::build_H2(o.m2, o.n2, c, p);
  auto c2 = certify_sign(h2, zero, hi, Sign::Positive, o.sign);
  c2.target = "H2";
  r.add(std::move(c2), std::move(h2));
  return r;
}

std::pair<std::optional<bool>, std::optional<bool>> theorem8_structural(const Rational& a, const Rational& x,
                                                                         Precision precision) {
  std::pair<std::optional<bool>, std::optional<bool>> out;
  for (Precision p = precision; p <= 8 * precision && !(out.first && out.second); p *= 2) {
    const Enclosure xe = Enclosure::from_rational(x, p);
    const Enclosure ma = m_a(a, p);
    if (certainly_less(xe, ma)) out.first = true;
    else if (certainly_less(ma, xe)) out.first = false;
    const Enclosure p1 = series::ExponentParameter::p1().value_at(xe);
    if (certainly_less(p1, a)) out.second = true;
    else if (certainly_greater(p1, a)) out.second = false;
  }
  return out;
}

Status theorem8_chain_at(const Rational& a, const Rational& x, Precision precision) {
  require_open_parameter_range(a);
  const Enclosure xe = Enclosure::from_rational(x, precision);
  if (x.sign() <= 0 || !certainly_less(xe, m_a(a, precision)))
    throw DomainError("sample " + x.to_string() + " is not inside (0, m_a)");
  const Enclosure L = exactnum::ln_sinc_value(xe);
  const Enclosure lhs = L * a;
  const Enclosure mid = series::ExponentParameter::p1().value_at(xe) * L;
  const Enclosure rhs = ldexp(exactnum::ln_cos_half_value(xe), 1);
  return of(certainly_less(lhs, mid) && certainly_less(mid, rhs));
}

TheoremReport prove_theorem8(const Rational& a, int samples, Precision precision) {
  require_open_parameter_range(a);
  if (samples < 1) throw DomainError("samples must be positive");
  TheoremReport r(8);
  const Rational top = to_rational(m_a(a, precision).lo());
  int chain = 0, structural = 0;
  for (const auto& x : spread(Rational(0), top, samples)) {
    if (theorem8_chain_at(a, x, precision) == Status::Proven) ++chain;
    const auto [below, p1_below] = theorem8_structural(a, x, precision);
    if (below == true && p1_below == true) ++structural;
  }
  r.add({"chain a ln sinc < p1 ln sinc < 2 ln cos(x/2)", of(chain == samples),
         std::to_string(chain) + "/" + std::to_string(samples) + " points in (0, m_a)"});
  r.add({"x < m_a <=> p1(x) < a", of(structural == samples),
         std::to_string(structural) + "/" + std::to_string(samples) + " points agree on both routes"});
  return r;
}

}  // namespace sinc::certify
