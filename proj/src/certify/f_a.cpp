#include "sinc/certify/f_a.hpp"

#include "sinc/errors.hpp"
#include "sinc/series/series_spec.hpp"

namespace sinc::certify {

void require_open_parameter_range(const Rational& a) {
  if (a <= Rational(3, 2) || a >= Rational(2))
    throw DomainError("parameter a must lie in (3/2, 2), got " + a.to_string());
}

Enclosure eval_f_a(const Rational& a, const Enclosure& x) { return series::SeriesSpec::f_a(a).value(x); }

Enclosure eval_f_a_near_pi(const Rational& a, const Enclosure& delta) {
  if (a <= Rational(1)) throw DomainError("f_a requires a > 1");
  return exactnum::ln_sinc_near_pi(delta) * a - ldexp(exactnum::ln_cos_half_near_pi(delta), 1);
}

Enclosure m_a(const Rational& a, Precision precision) {
  require_open_parameter_range(a);
  const Enclosure eps = Enclosure::from_rational((a - Rational(3, 2)) * Rational(2), precision);
  return exactnum::pi_enclosure(precision) * sqrt(eps);
}

}  // namespace sinc::certify
