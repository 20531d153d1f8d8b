#pragma once

#include <optional>
#include <utility>

#include "sinc/certify/sign_certificate.hpp"

namespace sinc::certify {

/// Bracket [lo, hi] with certified signs at both ends. Either end may be a
/// genuine interval (e.g. pi - delta) rather than a single float.
struct RootEnclosure {
  Enclosure lo;
  Enclosure hi;
  int sign_left;
  int sign_right;
  int evals = 0;

  /// hi.hi - lo.lo rounded up.
  BigFloat width() const;
  /// lo.lo <= q <= hi.hi
  bool brackets(const Rational& q) const;
};

struct XaOptions {
  Precision precision = exactnum::kDefaultPrecision;
  /// When set, seed the bracket from the smallest positive roots of the
  /// natural-extension envelopes of order `first` with endpoint `second`.
  std::optional<std::pair<int, Rational>> seed;
};

/// Unique zero of f_a on (0, pi), a in (3/2, 2), bracket width <= tol.
/// tol must be at least 2^(-precision/2).
RootEnclosure find_x_a(const Rational& a, const Rational& tol, const XaOptions& options = {});

/// Smallest positive root of a polynomial that is negative just right of 0
/// and has a positive leading coefficient; nullopt when it has no sign change
/// on (0, upper].
std::optional<RootEnclosure> smallest_positive_root(const EnvelopePolynomial& poly, const Enclosure& upper,
                                                    const Rational& tol, const SignOptions& options = {});

}  // namespace sinc::certify
