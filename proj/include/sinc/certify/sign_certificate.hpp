#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sinc/envelope/envelope_polynomial.hpp"
#include "sinc/exactnum/elementary.hpp"

namespace sinc::certify {

using envelope::EnvelopePolynomial;
using exactnum::BigFloat;
using exactnum::Enclosure;
using exactnum::Precision;
using exactnum::Rational;

enum class Sign { Negative = -1, Positive = 1 };
enum class Status { Proven, Refuted, Inconclusive };

std::string to_string(Sign sign);
std::string to_string(Status status);
Sign parse_sign(const std::string& text);
/// 0 PROVEN, 1 REFUTED, 2 INCONCLUSIVE
int exit_code(Status status);
/// Proven < Inconclusive < Refuted, i.e. the weakest of two outcomes.
Status combine(Status a, Status b);

enum class LeafKind {
  Evaluated,  // polynomial enclosure over the closed leaf
  Dominance   // (0, hi]: lowest-order term outweighs every higher term
};

struct Leaf {
  BigFloat lo;
  BigFloat hi;
  Enclosure value;  // for Dominance leaves, the deciding coefficient
  LeafKind kind;
};

struct SignOptions {
  int max_depth = 48;
  Precision precision = exactnum::kDefaultPrecision;
  /// Ladder ceiling: precision doubles on INCONCLUSIVE until it exceeds this.
  Precision max_precision = 1024;
};

struct SignCertificate {
  std::string target;
  Enclosure lo;
  Enclosure hi;
  Sign claimed;
  Status status;
  Precision precision_bits;
  int max_depth;
  std::vector<Leaf> leaves;
  std::optional<BigFloat> witness;
  std::optional<Enclosure> witness_value;
  std::string note;
};

/// Certifies sign(poly) == claimed on the open interval (lo, hi). When lo is
/// exactly zero the sign near 0 is settled by dominance of the lowest-order
/// non-zero term; the rest is adaptive bisection. Runs the precision ladder.
SignCertificate certify_sign(const EnvelopePolynomial& poly, const Enclosure& lo, const Enclosure& hi, Sign claimed,
                             const SignOptions& options = {});

/// One rung of the ladder, at options.precision only.
SignCertificate certify_sign_at(const EnvelopePolynomial& poly, const Enclosure& lo, const Enclosure& hi, Sign claimed,
                                const SignOptions& options);

/// Largest delta = hi / 2^j (j <= 512) such that the lowest-order non-zero term
/// dominates on (0, delta]; nullopt if that term's coefficient straddles zero,
/// a lower coefficient is not exactly zero, or no such delta was found.
/// `leading` receives the deciding term's index into poly.terms().
std::optional<BigFloat> dominance_radius(const EnvelopePolynomial& poly, const BigFloat& hi, Precision precision,
                                         std::size_t* leading = nullptr);

/// Re-checks every leaf at `precision` and the leaf chain's coverage of the
/// interval. PROVEN only when each leaf still decides the claimed sign.
Status replay(const SignCertificate& cert, const EnvelopePolynomial& poly, Precision precision);

}  // namespace sinc::certify
