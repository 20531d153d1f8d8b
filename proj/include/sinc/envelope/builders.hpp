#pragma once

#include "sinc/envelope/envelope_polynomial.hpp"
#include "sinc/exactnum/elementary.hpp"
#include "sinc/series/series_spec.hpp"

namespace sinc::envelope {

using series::SeriesSpec;

struct EnvelopePair {
  EnvelopePolynomial lower;
  EnvelopePolynomial upper;
};

/// Truncation/remainder envelopes of an even series in y = x^2 on (0, c):
///   T_n(x) = sum_{k<=n} a_k x^{2k}
///   R_m(x) = sum_{k<m} a_k x^{2k} + (x/c)^{2m} (f(c) - sum_{k<m} a_k c^{2k})
/// For a series whose coefficients are positive past the exceptional indices,
/// T_n is the lower envelope and R_m the upper one; for an all-negative series
/// the roles swap. n and m must exceed every exceptional index.
/// The remainder coefficient is rebuilt at doubled precision (up to 4 times)
/// while its enclosure fails to show the expected sign.
EnvelopePair wd_envelopes(const SeriesSpec& spec, const Enclosure& c, int n, int m,
                          Precision precision = exactnum::kDefaultPrecision);

/// Upper bound of G1(x) = p1(x) ln(sin x / x) - 2 ln cos(x / 2) on (0, c1):
/// p1 times the degree-m1 truncation of ln(sin x/x), plus twice the order-n1
/// remainder envelope of -ln cos(x/2).
EnvelopePolynomial build_H1(int m1, int n1, const Enclosure& c1, Precision precision = exactnum::kDefaultPrecision);

/// Lower bound of G2(x) = p2(x) ln(sin x / x) - 2 ln cos(x / 2) on (0, c2):
/// p2 times the order-m2 remainder envelope of ln(sin x/x), plus twice the
/// degree-n2 truncation of -ln cos(x/2).
EnvelopePolynomial build_H2(int m2, int n2, const Enclosure& c2, Precision precision = exactnum::kDefaultPrecision);

/// P_L < f_a < P_R on (0, c) for a in (3/2, 2) and n > frak_m(a) + 1.
EnvelopePair natural_extension_bounds(const Rational& a, int n, const Enclosure& c,
                                      Precision precision = exactnum::kDefaultPrecision);

}  // namespace sinc::envelope
