#include "sinc/series/coefficients.hpp"

#include <string>

#include "sinc/errors.hpp"
#include "sinc/exactnum/bernoulli.hpp"

namespace sinc::series {

using exactnum::bernoulli;
using exactnum::factorial;
using exactnum::power_of_two;

namespace {

void require_index(int k) {
  if (k <= 0) throw DomainError("series index must be positive, got " + std::to_string(k));
}

// |B_2k| / (k (2k)!)
Rational base_term(int k) {
  const Rational b = bernoulli(2 * k).abs();
  return b / Rational(factorial(static_cast<unsigned>(2 * k)) * k, mpz_class(1));
}

}  // namespace

Rational ln_sinc_coeff(int k) {
  require_index(k);
  return -(power_of_two(2 * k - 1) * base_term(k));
}

Rational ln_cos_coeff(int k) {
  require_index(k);
  return -(power_of_two(2 * k - 1) * (power_of_two(2 * k) - 1) * base_term(k));
}

Rational ln_cos_half_coeff(int k) {
  require_index(k);
  // 2^{2k-1} (4^k - 1) / 4^k = (4^k - 1) / 2
  return -((power_of_two(2 * k) - 1) / 2 * base_term(k));
}

Rational E_coeff(const Rational& a, int k) {
  require_index(k);
  if (a <= Rational(1)) throw DomainError("E_k requires a > 1, got " + a.to_string());
  return ((Rational(2) - a) * power_of_two(2 * k) - 2) * base_term(k) / 2;
}

Rational alpha(int k) {
  require_index(k);
  return Rational(2) - power_of_two(1 - 2 * k);
}

int frak_m(const Rational& a) {
  if (a < Rational(3, 2) || a >= Rational(2)) {
    throw DomainError("frak_m is defined on [3/2, 2), got " + a.to_string());
  }
  if (a == Rational(3, 2)) return 0;
  int k = 1;
  while (!(alpha(k) < a && a <= alpha(k + 1))) ++k;
  return k;
}

}  // namespace sinc::series
