#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sinc/certify/sign_certificate.hpp"

namespace sinc::certify {

struct DerivativeSign {
  int order;
  Sign sign;
  /// Near zero: the deciding coefficient of the derivative's lowest term.
  /// At pi - eta: enclosure of the derivative value.
  Enclosure value;
};

/// Conditions for exactly one zero of f_a on (0, pi):
///   f_a^{(j)} < 0 on (0, delta] and f_a^{(j)}(pi - eta) > 0 for j = 0..2m,
///   f_a^{(j)} > 0 on (0, pi) for every j > 2m, m = frak_m(a).
/// The last line rests on the series: a derivative of order j > 2m only keeps
/// the terms with k > m, and E_k > 0 there.
struct UniqueZeroCertificate {
  Rational a;
  int m;
  Rational delta;
  Rational eta;
  std::vector<DerivativeSign> near_zero_signs;
  std::vector<DerivativeSign> endpoint_signs;
  std::string higher_derivative_basis;
  Status status;
  std::optional<int> failing_order;
  std::string failing_side;  // "near_zero" or "endpoint"
};

/// Certificate at fixed delta and eta. a in [3/2, 2); at a = 3/2 the lists are
/// empty and the certificate holds vacuously.
UniqueZeroCertificate unique_zero_certificate(const Rational& a, const Rational& delta, const Rational& eta,
                                              Precision precision = exactnum::kDefaultPrecision);

/// delta found by halving from 1/2; eta = 1/100 halved up to 5 times.
UniqueZeroCertificate unique_zero_certificate(const Rational& a, Precision precision = exactnum::kDefaultPrecision);

}  // namespace sinc::certify
