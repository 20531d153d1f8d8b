#include "sinc/certify/unique_zero.hpp"

#include "sinc/certify/f_a.hpp"
#include "sinc/certify/jet.hpp"
#include "sinc/errors.hpp"
#include "sinc/series/coefficients.hpp"

namespace sinc::certify {

using series::E_coeff;

namespace {

Rational falling(int n, int j) {
  Rational out(1);
  for (int i = 0; i < j; ++i) out *= Rational(n - i);
  return out;
}

// d^j/dx^j sum E_k x^{2k} < 0 on (0, delta]: the lowest surviving term
// (k0 = max(1, ceil(j/2))) outweighs the rest. Exact terms up to k0 + 40,
// then |E_k| <= max(a,2) zeta(2) / (k pi^{2k}) with pi^2 > 9.
std::optional<Rational> near_zero_margin(const Rational& a, int j, const Rational& delta) {
  const int k0 = std::max(1, (j + 1) / 2);
  const Rational lead = E_coeff(a, k0) * falling(2 * k0, j);
  if (lead.sign() >= 0) return std::nullopt;
  const Rational d2 = delta * delta;
  const int K = k0 + 40;
  Rational rest(0);
  Rational pw(1);
  for (int k = k0 + 1; k <= K; ++k) {
    pw *= d2;
    rest += (E_coeff(a, k) * falling(2 * k, j)).abs() * pw;
  }
  // tail: F zeta2 2^j k^{j-1} r^k delta^{-2 k0}, r = delta^2/9, bounded by a geometric series
  const Rational F = std::max(a, Rational(2)) * exactnum::zeta2_upper();
  const Rational r = d2 / Rational(9);
  const Rational kk(K + 1);
  Rational ratio = r * ((kk + Rational(1)) / kk).pow(static_cast<unsigned>(std::max(0, j - 1)));
  if (ratio >= Rational(1)) return std::nullopt;
  const Rational first = F * exactnum::power_of_two(j) * kk.pow(static_cast<unsigned>(std::max(0, j - 1))) * r.pow(K + 1) /
                         d2.pow(static_cast<unsigned>(k0));
  rest += first / (Rational(1) - ratio);
  const Rational margin = lead.abs() - rest;
  if (margin.sign() <= 0) return std::nullopt;
  return lead;
}

// Derivatives f_a^{(j)}(pi - eta), j = 1..order, from the jet of
// f_a' = a (cot x - 1/x) + tan(x/2) seeded in complement coordinates.
std::vector<Enclosure> endpoint_derivatives(const Rational& a, const Rational& eta, int order, Precision p) {
  if (order < 1) return {};
  const int n = order - 1;
  const Enclosure e = Enclosure::from_rational(eta, p);
  const Enclosure e2 = Enclosure::from_rational(eta / Rational(2), p);
  const Enclosure x0 = exactnum::pi_enclosure(p) - e;
  const Enclosure s = exactnum::sin_value(e), c = -exactnum::cos_value(e);
  const Enclosure sh = exactnum::cos_value(e2), ch = exactnum::sin_value(e2);
  const Jet sinj = Jet::sin_shifted(s, c, Rational(1), n);
  const Jet cosj = Jet::cos_shifted(s, c, Rational(1), n);
  const Jet sinh = Jet::sin_shifted(sh, ch, Rational(1, 2), n);
  const Jet cosh = Jet::cos_shifted(sh, ch, Rational(1, 2), n);
  const Jet one = Jet::constant(Enclosure::from_integer(1, p), n);
  const Jet g = a * (cosj / sinj - one / Jet::variable(x0, n)) + sinh / cosh;
  std::vector<Enclosure> out;
  for (int i = 0; i <= n; ++i) out.push_back(g.derivative(i));
  return out;
}

std::string basis_note(const Rational& a, int m) {
  if (m == 0) return "no negative coefficients: E_1 = 0 and E_k > 0 for k >= 2, so f_a > 0 on (0, pi)";
  for (int k = m + 1; k <= m + 10; ++k)
    if (E_coeff(a, k).sign() < 0) throw CertificationError("unexpected negative E_k past frak_m");
  return "derivatives of order > " + std::to_string(2 * m) + " keep only E_k with k > " + std::to_string(m) +
         "; (2 - a) 4^k - 2 increases with k and is >= 0 from k = " + std::to_string(m + 1) +
         " (checked exactly through k = " + std::to_string(m + 10) + ")";
}

}  // namespace

UniqueZeroCertificate unique_zero_certificate(const Rational& a, const Rational& delta, const Rational& eta,
                                              Precision precision) {
  if (a < Rational(3, 2) || a >= Rational(2)) throw DomainError("unique-zero certificate needs a in [3/2, 2)");
  if (delta.sign() <= 0 || eta.sign() <= 0 || eta > Rational(3, 2) || delta >= Rational(3) - eta)
    throw DomainError("need 0 < delta < 3 - eta and 0 < eta <= 3/2");
  const int m = series::frak_m(a);
  UniqueZeroCertificate cert{a, m, delta, eta, {}, {}, basis_note(a, m), Status::Proven, {}, {}};
  if (m == 0) return cert;

  const int top = 2 * m;
  for (int j = 0; j <= top; ++j) {
    const auto lead = near_zero_margin(a, j, delta);
    if (!lead) {
      cert.status = Status::Inconclusive;
      cert.failing_order = j;
      cert.failing_side = "near_zero";
      return cert;
    }
    cert.near_zero_signs.push_back({j, Sign::Negative, Enclosure::from_rational(*lead, precision)});
  }

  const Enclosure f0 = eval_f_a_near_pi(a, Enclosure::from_rational(eta, precision));
  std::vector<Enclosure> vals{f0};
  for (auto& d : endpoint_derivatives(a, eta, top, precision)) vals.push_back(std::move(d));
  for (int j = 0; j <= top; ++j) {
    if (!vals[j].is_positive()) {
      cert.status = Status::Inconclusive;
      cert.failing_order = j;
      cert.failing_side = "endpoint";
      return cert;
    }
    cert.endpoint_signs.push_back({j, Sign::Positive, vals[j]});
  }
  return cert;
}

UniqueZeroCertificate unique_zero_certificate(const Rational& a, Precision precision) {
  Rational delta(1, 2);
  const int m = (a >= Rational(3, 2) && a < Rational(2)) ? series::frak_m(a) : 0;
  for (int i = 0; i < 60 && m > 0; ++i, delta /= Rational(2)) {
    bool ok = true;
    for (int j = 0; j <= 2 * m && ok; ++j) ok = near_zero_margin(a, j, delta).has_value();
    if (ok) break;
  }
  Rational eta(1, 100);
  UniqueZeroCertificate cert = unique_zero_certificate(a, delta, eta, precision);
  for (int i = 0; i < 5 && cert.status != Status::Proven && cert.failing_side == "endpoint"; ++i) {
    eta /= Rational(2);
    cert = unique_zero_certificate(a, delta, eta, precision);
  }
  return cert;
}

}  // namespace sinc::certify
