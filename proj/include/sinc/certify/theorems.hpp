#pragma once

#include <string>
#include <vector>

#include "sinc/certify/sign_certificate.hpp"

namespace sinc::certify {

struct Check {
  std::string name;
  Status status;
  std::string detail;
};

struct TheoremReport {
  explicit TheoremReport(int id) : theorem(id) {}

  int theorem;
  Status status = Status::Proven;
  std::vector<Check> checks;
  std::vector<SignCertificate> certificates;
  std::vector<EnvelopePolynomial> polynomials;  // polynomials[i] is the subject of certificates[i]

  void add(Check c);
  void add(SignCertificate cert, EnvelopePolynomial poly);
};

/// (sin x/x)^{3/2} > cos^2(x/2) on (0, pi): E_1(3/2) = 0, E_k(3/2) > 0 for
/// 2 <= k <= 50 and by the closed form beyond, plus pointwise samples.
TheoremReport prove_theorem4(int samples = 50, Precision precision = exactnum::kDefaultPrecision);

/// (sin x/x)^a <= cos^2(x/2) on (0, pi) for a >= 2, via sin t <= t - t^3/6 + t^5/120
/// and a certificate that 1/6 - t^2/120 > 0 on (0, pi/2), plus samples.
TheoremReport prove_theorem5(int samples = 50, const SignOptions& options = {});

struct Theorem7Options {
  int m1 = 25;
  int n1 = 10;
  int m2 = 13;
  int n2 = 27;
  Rational c{31, 10};
  /// Right end of the certified interval (0, hi); must not exceed c.
  Rational hi{31, 10};
  SignOptions sign;
};

/// H1 < 0 and H2 > 0 on (0, hi).
TheoremReport prove_theorem7(const Theorem7Options& options = {});

/// For x in (0, m_a): a ln sinc x < p1(x) ln sinc x < 2 ln cos(x/2), certified
/// at `samples` points, with the first step cross-checked as x < m_a <=> p1(x) < a.
TheoremReport prove_theorem8(const Rational& a, int samples = 25, Precision precision = exactnum::kDefaultPrecision);

/// The chain at one rational x; DomainError unless 0 < x < m_a.
Status theorem8_chain_at(const Rational& a, const Rational& x, Precision precision = exactnum::kDefaultPrecision);

/// Two independent decisions of the first step: {x < m_a, p1(x) < a}.
/// nullopt entries mean the enclosures did not separate.
std::pair<std::optional<bool>, std::optional<bool>> theorem8_structural(
    const Rational& a, const Rational& x, Precision precision = exactnum::kDefaultPrecision);

}  // namespace sinc::certify
