#include "sinc/envelope/builders.hpp"

#include <algorithm>
#include <map>

#include "sinc/errors.hpp"
#include "sinc/series/coefficients.hpp"

namespace sinc::envelope {

using exactnum::pi_enclosure;
using series::ExponentParameter;

namespace {

// Coefficient kept as an exact rational plus an optional inexact remainder,
// so that structural cancellations in H1/H2 produce exact zeros.
struct Mixed {
  Rational exact;
  std::optional<Enclosure> inexact;
};

class MixedPoly {
 public:
  void add(int power, const Rational& q) { slot(power).exact += q; }

  void add(int power, const Enclosure& e) {
    Mixed& m = slot(power);
    m.inexact = m.inexact ? *m.inexact + e : e;
  }

  void add(const MixedPoly& other) {
    for (const auto& [p, m] : other.coeffs_) {
      add(p, m.exact);
      if (m.inexact) add(p, *m.inexact);
    }
  }

  MixedPoly scaled(const Rational& s) const {
    MixedPoly out;
    for (const auto& [p, m] : coeffs_) {
      out.add(p, m.exact * s);
      if (m.inexact) out.add(p, *m.inexact * s);
    }
    return out;
  }

  // Product with p0 + p2 x^2.
  MixedPoly weighted(const ExponentParameter& w, Precision precision) const {
    MixedPoly out = scaled(w.constant_term());
    if (w.kind() == ExponentParameter::Kind::Constant) return out;
    for (const auto& [p, m] : coeffs_) {
      if (!w.over_pi_squared()) {
        out.add(p + 2, m.exact * w.quadratic_rational());
        if (m.inexact) out.add(p + 2, *m.inexact * w.quadratic_rational());
      } else {
        const Enclosure q = w.quadratic_coefficient(precision);
        Enclosure v = q * m.exact;
        if (m.inexact) v += q * *m.inexact;
        out.add(p + 2, v);
      }
    }
    return out;
  }

  std::vector<Term> terms(Precision precision) const {
    std::vector<Term> out;
    for (const auto& [p, m] : coeffs_) {
      Enclosure v = Enclosure::from_rational(m.exact, precision);
      if (m.inexact) v = v + *m.inexact;
      out.push_back({p, std::move(v)});
    }
    return out;
  }

 private:
  Mixed& slot(int power) { return coeffs_.try_emplace(power, Mixed{Rational(0), std::nullopt}).first->second; }

  std::map<int, Mixed> coeffs_;
};

void check_c(const Enclosure& c, Precision precision) {
  if (!c.is_positive()) throw DomainError("envelope endpoint c must be positive");
  if (!certainly_less(c, pi_enclosure(precision))) throw DomainError("envelope endpoint c must lie below pi");
}

MixedPoly truncation(const SeriesSpec& spec, int n) {
  MixedPoly out;
  for (int k = 1; k <= n; ++k) out.add(2 * k, spec.coefficient(k));
  return out;
}

// Remainder envelope; `sign` is the sign the x^{2m} coefficient must show.
MixedPoly remainder(const SeriesSpec& spec, const Enclosure& c, int m, int sign, Precision precision) {
  Precision p = precision;
  for (int attempt = 0; attempt <= 4; ++attempt, p *= 2) {
    const Enclosure cc = c.rounded_to(p);
    const Enclosure c2 = square(cc);
    Enclosure partial = Enclosure::from_integer(0, p);
    Enclosure c2k = Enclosure::from_integer(1, p);
    MixedPoly out;
    for (int k = 1; k < m; ++k) {
      c2k = c2k * c2;
      const Rational a = spec.coefficient(k);
      partial += c2k * a;
      out.add(2 * k, a);
    }
    const Enclosure d = (spec.value(cc) - partial) / (m == 0 ? Enclosure::from_integer(1, p) : c2k * c2);
    if (d.strict_sign() == sign) {
      out.add(2 * m, d.rounded_to(precision));
      return out;
    }
  }
  throw CertificationError("remainder coefficient of " + spec.name() + " has undetermined sign at order " +
                           std::to_string(m));
}

int max_exceptional(const SeriesSpec& spec) {
  const auto j = spec.exceptional_indices();
  return j.empty() ? 0 : j.back();
}

}  // namespace

EnvelopePair wd_envelopes(const SeriesSpec& spec, const Enclosure& c, int n, int m, Precision precision) {
  if (n < 0 || m < 0) throw DomainError("envelope orders must be non-negative");
  check_c(c, precision);
  const int jmax = max_exceptional(spec);
  if (jmax > 0 && (n <= jmax || m <= jmax))
    throw DomainError("envelope orders must exceed the largest non-positive coefficient index " +
                      std::to_string(jmax));
  const int sigma = spec.bulk_sign();
  EnvelopePolynomial t(spec.name(), sigma > 0 ? Side::Lower : Side::Upper, c,
                       truncation(spec, n).terms(precision));
  // with m == 0 the remainder is the constant f(c); no sign constraint applies
  const int want = m == 0 ? spec.value(c.rounded_to(precision)).strict_sign().value_or(0) : sigma;
  EnvelopePolynomial r(spec.name(), sigma > 0 ? Side::Upper : Side::Lower, c,
                       remainder(spec, c, m, want, precision).terms(precision));
  if (sigma > 0) return {std::move(t), std::move(r)};
  return {std::move(r), std::move(t)};
}

EnvelopePolynomial build_H1(int m1, int n1, const Enclosure& c1, Precision precision) {
  if (m1 < 2 || n1 < 2) throw DomainError("H1 needs m1, n1 >= 2");
  check_c(c1, precision);
  MixedPoly h = truncation(SeriesSpec::ln_sinc(), m1).weighted(ExponentParameter::p1(), precision);
  h.add(remainder(SeriesSpec::ln_cos_half(), c1, n1, -1, precision).scaled(Rational(-2)));
  return EnvelopePolynomial("G1", Side::Upper, c1, h.terms(precision));
}

EnvelopePolynomial build_H2(int m2, int n2, const Enclosure& c2, Precision precision) {
  if (m2 < 2 || n2 < 2) throw DomainError("H2 needs m2, n2 >= 2");
  check_c(c2, precision);
  MixedPoly h = remainder(SeriesSpec::ln_sinc(), c2, m2, -1, precision).weighted(ExponentParameter::p2(), precision);
  h.add(truncation(SeriesSpec::ln_cos_half(), n2).scaled(Rational(-2)));
  return EnvelopePolynomial("G2", Side::Lower, c2, h.terms(precision));
}

EnvelopePair natural_extension_bounds(const Rational& a, int n, const Enclosure& c, Precision precision) {
  if (a <= Rational(3, 2) || a >= Rational(2)) throw DomainError("natural extension bounds need a in (3/2, 2)");
  const int fm = series::frak_m(a);
  if (n <= fm + 1) throw DomainError("natural extension bounds need n > m(a) + 1 = " + std::to_string(fm + 1));
  return wd_envelopes(SeriesSpec::f_a(a), c, n, n, precision);
}

}  // namespace sinc::envelope
