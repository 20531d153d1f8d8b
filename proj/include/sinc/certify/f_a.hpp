#pragma once

#include "sinc/exactnum/elementary.hpp"

namespace sinc::certify {

using exactnum::Enclosure;
using exactnum::Precision;
using exactnum::Rational;

/// f_a(x) = a ln(sin x / x) - 2 ln cos(x / 2) for x strictly inside (0, pi), a > 1.
Enclosure eval_f_a(const Rational& a, const Enclosure& x);

/// f_a(pi - delta) for delta in (0, 3/2], accurate however small delta is.
Enclosure eval_f_a_near_pi(const Rational& a, const Enclosure& delta);

/// pi sqrt(2 (a - 3/2)) for a in (3/2, 2).
Enclosure m_a(const Rational& a, Precision precision = exactnum::kDefaultPrecision);

/// Requires a in (3/2, 2).
void require_open_parameter_range(const Rational& a);

}  // namespace sinc::certify
