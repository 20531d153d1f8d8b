#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sinc/exactnum/enclosure.hpp"

namespace sinc::envelope {

using exactnum::BigFloat;
using exactnum::Enclosure;
using exactnum::Precision;
using exactnum::Rational;

enum class Side { Lower, Upper };

std::string to_string(Side side);
/// "LOWER" / "UPPER" (case-insensitive); DomainError otherwise.
Side parse_side(const std::string& text);

struct Term {
  int power;  // even, >= 0
  Enclosure value;
};

/// Even polynomial sum value_i x^{power_i} bounding `target` from one side on (0, c).
class EnvelopePolynomial {
 public:
  /// Powers must be even, non-negative and strictly increasing.
  EnvelopePolynomial(std::string target, Side side, Enclosure validity_c, std::vector<Term> terms);

  const std::string& target() const { return target_; }
  Side side() const { return side_; }
  const Enclosure& validity_c() const { return validity_c_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Largest precision among the coefficients and the validity endpoint.
  Precision precision() const;
  int degree() const { return terms_.empty() ? 0 : terms_.back().power; }

  /// nullopt when the power does not occur.
  std::optional<Enclosure> coefficient(int power) const;

  /// Outward-rounded value on an interval of x, working at `precision` bits
  /// (0 means the polynomial's own precision).
  Enclosure evaluate(const Enclosure& x, Precision precision = 0) const;

  /// Same polynomial restricted to a new label/side, e.g. for negation chains.
  EnvelopePolynomial negated(std::string target, Side side) const;

 private:
  std::string target_;
  Side side_;
  Enclosure validity_c_;
  std::vector<Term> terms_;
};

/// Sign-split Horner on y = x^2 for y in [ylo, yhi], ylo >= 0:
/// positive and negative coefficient parts are summed separately with the
/// rounding direction fixed by the monotonicity of each part.
Enclosure evaluate_even(const std::vector<Term>& terms, const BigFloat& ylo, const BigFloat& yhi, Precision precision);

}  // namespace sinc::envelope
