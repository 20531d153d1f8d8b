#include "sinc/envelope/envelope_polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "sinc/errors.hpp"

namespace sinc::envelope {

std::string to_string(Side side) { return side == Side::Lower ? "LOWER" : "UPPER"; }

Side parse_side(const std::string& text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
  if (t == "LOWER") return Side::Lower;
  if (t == "UPPER") return Side::Upper;
  throw DomainError("unknown side '" + text + "'");
}

EnvelopePolynomial::EnvelopePolynomial(std::string target, Side side, Enclosure validity_c, std::vector<Term> terms)
    : target_(std::move(target)), side_(side), validity_c_(std::move(validity_c)), terms_(std::move(terms)) {
  int last = -1;
  for (const auto& t : terms_) {
    if (t.power < 0 || t.power % 2 != 0) throw DomainError("envelope power must be even and non-negative");
    if (t.power <= last) throw DomainError("envelope powers must increase strictly");
    last = t.power;
  }
  if (!validity_c_.is_positive()) throw DomainError("validity endpoint must be positive");
}

Precision EnvelopePolynomial::precision() const {
  Precision p = validity_c_.precision();
  for (const auto& t : terms_) p = std::max(p, t.value.precision());
  return p;
}

std::optional<Enclosure> EnvelopePolynomial::coefficient(int power) const {
  for (const auto& t : terms_)
    if (t.power == power) return t.value;
  return std::nullopt;
}

EnvelopePolynomial EnvelopePolynomial::negated(std::string target, Side side) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.power, -t.value});
  return EnvelopePolynomial(std::move(target), side, validity_c_, std::move(out));
}

Enclosure EnvelopePolynomial::evaluate(const Enclosure& x, Precision precision) const {
  if (precision == 0) precision = std::max(this->precision(), x.precision());
  const Enclosure y = square(x.rounded_to(precision));
  return evaluate_even(terms_, y.lo(), y.hi(), precision);
}

namespace {

// Horner for sum part(c_k) y^k over one rounding direction; every partial
// value stays non-negative so rounding `rnd` bounds the exact sum.
void horner_part(mpfr_ptr acc, const std::vector<Term>& terms, bool upper_end, bool positive_part, mpfr_srcptr y,
                 mpfr_rnd_t rnd, mpfr_ptr scratch) {
  mpfr_set_zero(acc, 1);
  int prev = -1;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const int k = it->power / 2;
    if (prev >= 0) {
      for (int i = k; i < prev; ++i) mpfr_mul(acc, acc, y, rnd);
    }
    mpfr_srcptr c = upper_end ? it->value.hi().get() : it->value.lo().get();
    const int s = mpfr_sgn(c);
    if (positive_part && s > 0) {
      mpfr_add(acc, acc, c, rnd);
    } else if (!positive_part && s < 0) {
      mpfr_neg(scratch, c, MPFR_RNDN);
      mpfr_add(acc, acc, scratch, rnd);
    }
    prev = k;
  }
  if (prev > 0) {
    for (int i = 0; i < prev; ++i) mpfr_mul(acc, acc, y, rnd);
  }
}

}  // namespace

Enclosure evaluate_even(const std::vector<Term>& terms, const BigFloat& ylo, const BigFloat& yhi, Precision precision) {
  if (mpfr_sgn(ylo.get()) < 0) throw DomainError("evaluate_even needs y >= 0");
  // coefficient endpoints may carry more bits than `precision`; negation in
  // horner_part must be exact, so the scratch takes the widest precision.
  Precision wide = precision;
  for (const auto& t : terms) wide = std::max(wide, t.value.precision());
  BigFloat pos(precision), neg(precision), scratch(wide);
  BigFloat lo(precision), hi(precision);

  // lower end: positive parts of lo-coefficients at ylo, negative parts of lo-coefficients at yhi
  horner_part(pos.get(), terms, false, true, ylo.get(), MPFR_RNDD, scratch.get());
  horner_part(neg.get(), terms, false, false, yhi.get(), MPFR_RNDU, scratch.get());
  mpfr_sub(lo.get(), pos.get(), neg.get(), MPFR_RNDD);

  horner_part(pos.get(), terms, true, true, yhi.get(), MPFR_RNDU, scratch.get());
  horner_part(neg.get(), terms, true, false, ylo.get(), MPFR_RNDD, scratch.get());
  mpfr_sub(hi.get(), pos.get(), neg.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

}  // namespace sinc::envelope
