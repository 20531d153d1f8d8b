#pragma once

#include "sinc/exactnum/rational.hpp"

namespace sinc::series {

using exactnum::Rational;

/// x^{2k} coefficient of ln(sin x / x): -2^{2k-1} |B_2k| / (k (2k)!).
Rational ln_sinc_coeff(int k);

/// x^{2k} coefficient of ln cos x: -2^{2k-1} (2^{2k} - 1) |B_2k| / (k (2k)!).
Rational ln_cos_coeff(int k);

/// x^{2k} coefficient of ln cos(x / 2), i.e. ln_cos_coeff(k) / 4^k.
Rational ln_cos_half_coeff(int k);

/// x^{2k} coefficient of f_a(x) = a ln(sin x / x) - 2 ln cos(x / 2):
/// ((2 - a) 4^k - 2) |B_2k| / (2k (2k)!). Requires a > 1.
Rational E_coeff(const Rational& a, int k);

/// Threshold sequence 2 - 2 / 4^k.
Rational alpha(int k);

/// The k with alpha(k) < a <= alpha(k+1); 0 at a = 3/2. Domain [3/2, 2).
int frak_m(const Rational& a);

}  // namespace sinc::series
