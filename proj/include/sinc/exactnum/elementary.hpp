#pragma once

#include "sinc/exactnum/enclosure.hpp"

namespace sinc::exactnum {

/// Extra bits carried internally before rounding results outward to the
/// caller's precision.
inline constexpr Precision kGuardBits = 64;

/// Default working precision for the library.
inline constexpr Precision kDefaultPrecision = 256;

/// Upper bound used for zeta(2) = pi^2 / 6 in every series majorant.
Rational zeta2_upper();

/// How a logarithmic series value is obtained.
///   Series - partial sum of the Bernoulli series plus a geometric tail bound;
///   Direct - Taylor enclosure of sin/cos followed by an atanh-based logarithm;
///   Auto   - Series whenever the truncation index stays within the Bernoulli table.
enum class Route { Auto, Series, Direct };

/// Machin-formula enclosure of pi, width <= 2^(4 - precision). Cached.
Enclosure pi_enclosure(Precision precision);

/// 2 atanh(1/3). Cached.
Enclosure ln2_enclosure(Precision precision);

/// Natural logarithm of a strictly positive enclosure.
Enclosure ln_positive(const Enclosure& y);

/// sin and cos on enclosures inside [0, pi].
Enclosure sin_value(const Enclosure& x);
Enclosure cos_value(const Enclosure& x);

/// ln(sin x / x) for x strictly inside (0, pi).
Enclosure ln_sinc_value(const Enclosure& x, Route route = Route::Auto);

/// ln cos(x / 2) for x strictly inside (0, pi).
Enclosure ln_cos_half_value(const Enclosure& x, Route route = Route::Auto);

/// ln(sin x / x) and ln cos(x / 2) at x = pi - delta, delta in (0, 3/2].
/// Parametrising by the distance to pi keeps full relative accuracy when x
/// is closer to pi than any float of the working precision.
Enclosure ln_sinc_near_pi(const Enclosure& delta);
Enclosure ln_cos_half_near_pi(const Enclosure& delta);

/// Majorant for sum_{k>N} zeta(2k)/k (x/pi)^{2k}, scaled by `factor`:
///   factor * zeta(2) * r^{N+1} / ((N+1)(1 - r)),  r = (x/pi)^2.
/// Requires x < pi. Returned as a point enclosure at the bound.
Enclosure geometric_tail_bound(int terms, const Enclosure& x, const Rational& factor);

}  // namespace sinc::exactnum
