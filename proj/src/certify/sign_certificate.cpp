#include "sinc/certify/sign_certificate.hpp"

#include <algorithm>
#include <cctype>

#include "sinc/errors.hpp"

namespace sinc::certify {

using envelope::Term;

std::string to_string(Sign sign) { return sign == Sign::Negative ? "NEGATIVE" : "POSITIVE"; }

std::string to_string(Status status) {
  switch (status) {
    case Status::Proven:
      return "PROVEN";
    case Status::Refuted:
      return "REFUTED";
    case Status::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

Sign parse_sign(const std::string& text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
  if (t == "NEGATIVE" || t == "NEG" || t == "-") return Sign::Negative;
  if (t == "POSITIVE" || t == "POS" || t == "+") return Sign::Positive;
  throw DomainError("unknown sign '" + text + "' (expected NEGATIVE or POSITIVE)");
}

int exit_code(Status status) {
  switch (status) {
    case Status::Proven:
      return 0;
    case Status::Refuted:
      return 1;
    case Status::Inconclusive:
      return 2;
  }
  return 3;
}

Status combine(Status a, Status b) {
  if (a == Status::Refuted || b == Status::Refuted) return Status::Refuted;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Proven;
}

namespace {

bool dominates_at(const std::vector<Term>& terms, std::size_t lead, const BigFloat& delta, Precision precision) {
  BigFloat y(precision), sum(precision), t(precision), pw(precision);
  mpfr_sqr(y.get(), delta.get(), MPFR_RNDU);
  // sum_{i > lead} |a_i| y^{(p_i - p_lead)/2}, rounded up
  for (std::size_t i = lead + 1; i < terms.size(); ++i) {
    const BigFloat mag = terms[i].value.magnitude();
    mpfr_pow_ui(pw.get(), y.get(), static_cast<unsigned long>((terms[i].power - terms[lead].power) / 2), MPFR_RNDU);
    mpfr_mul(t.get(), mag.get(), pw.get(), MPFR_RNDU);
    mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDU);
  }
  const BigFloat mig = terms[lead].value.mignitude();
  return mpfr_less_p(sum.get(), mig.get()) != 0;
}

std::optional<std::size_t> leading_term(const std::vector<Term>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].value.is_exact_zero()) continue;
    if (terms[i].value.contains_zero()) return std::nullopt;
    return i;
  }
  return std::nullopt;
}

struct Frame {
  BigFloat lo;
  BigFloat hi;
  int depth;
};

Enclosure eval_on(const EnvelopePolynomial& poly, const BigFloat& lo, const BigFloat& hi, Precision p) {
  BigFloat ylo(p), yhi(p);
  mpfr_sqr(ylo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqr(yhi.get(), hi.get(), MPFR_RNDU);
  return envelope::evaluate_even(poly.terms(), ylo, yhi, p);
}

void validate(const EnvelopePolynomial& poly, const Enclosure& lo, const Enclosure& hi) {
  if (mpfr_sgn(lo.lo().get()) < 0) throw DomainError("sign interval must lie in x >= 0");
  if (!lo.is_exact_zero() && !lo.is_positive()) throw DomainError("sign interval left end straddles zero");
  if (!certainly_less(lo, hi)) throw DomainError("sign interval is empty or its ends overlap");
  if (certainly_less(poly.validity_c(), hi)) throw DomainError("sign interval exceeds the envelope validity (0, c)");
}

}  // namespace

std::optional<BigFloat> dominance_radius(const EnvelopePolynomial& poly, const BigFloat& hi, Precision precision,
                                         std::size_t* leading) {
  const auto lead = leading_term(poly.terms());
  if (!lead) return std::nullopt;
  if (leading) *leading = *lead;
  BigFloat delta(precision);
  mpfr_set(delta.get(), hi.get(), MPFR_RNDD);
  for (int j = 0; j <= 512; ++j) {
    if (dominates_at(poly.terms(), *lead, delta, precision)) return delta;
    mpfr_div_2ui(delta.get(), delta.get(), 1, MPFR_RNDD);
  }
  return std::nullopt;
}

SignCertificate certify_sign_at(const EnvelopePolynomial& poly, const Enclosure& lo, const Enclosure& hi, Sign claimed,
                                const SignOptions& options) {
  validate(poly, lo, hi);
  if (options.max_depth < 1) throw DomainError("max_depth must be at least 1");
  const Precision p = options.precision;
  const int want = static_cast<int>(claimed);
  SignCertificate cert{poly.target(), lo, hi, claimed, Status::Inconclusive, p, options.max_depth, {}, {}, {}, {}};

  auto refute_at = [&](const BigFloat& x) {
    const Enclosure v = poly.evaluate(Enclosure::point(x), p);
    if (v.strict_sign() == -want) {
      cert.status = Status::Refuted;
      cert.witness = x;
      cert.witness_value = v;
      return true;
    }
    return false;
  };

  BigFloat start(p);
  mpfr_set(start.get(), lo.lo().get(), MPFR_RNDD);
  BigFloat end(p);
  mpfr_set(end.get(), hi.hi().get(), MPFR_RNDU);

  if (lo.is_exact_zero()) {
    std::size_t lead = 0;
    const auto delta = dominance_radius(poly, end, p, &lead);
    if (!delta) {
      cert.note = "no decisive lowest-order term near zero";
      return cert;
    }
    const Enclosure& c = poly.terms()[lead].value;
    if (c.strict_sign() != want) {
      // the sign on (0, delta] is the opposite one; find a witness
      BigFloat x(*delta);
      for (int j = 0; j < 64; ++j, mpfr_div_2ui(x.get(), x.get(), 1, MPFR_RNDN))
        if (refute_at(x)) return cert;
      cert.note = "leading term has the opposite sign but no witness evaluated cleanly";
      return cert;
    }
    cert.leaves.push_back({BigFloat(p), *delta, c, LeafKind::Dominance});
    start = *delta;
  }

  std::vector<Frame> stack;
  if (mpfr_less_p(start.get(), end.get())) stack.push_back({start, end, 0});
  BigFloat mid(p);
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const Enclosure v = eval_on(poly, f.lo, f.hi, p);
    const auto s = v.strict_sign();
    if (s == want) {
      cert.leaves.push_back({f.lo, f.hi, v, LeafKind::Evaluated});
      continue;
    }
    mpfr_add(mid.get(), f.lo.get(), f.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    if (s == -want) {
      if (!refute_at(mid)) cert.note = "leaf of opposite sign whose midpoint did not evaluate cleanly";
      if (cert.status != Status::Refuted) cert.status = Status::Inconclusive;
      return cert;
    }
    if (refute_at(mid)) return cert;
    const bool splittable = mpfr_less_p(f.lo.get(), mid.get()) && mpfr_less_p(mid.get(), f.hi.get());
    if (f.depth >= options.max_depth || !splittable) {
      cert.note = "undecided leaf at depth " + std::to_string(f.depth) + " near " + mid.to_decimal(17);
      return cert;
    }
    // right half first on the stack so leaves come out left to right
    stack.push_back({mid, f.hi, f.depth + 1});
    stack.push_back({f.lo, mid, f.depth + 1});
  }
  cert.status = Status::Proven;
  return cert;
}

SignCertificate certify_sign(const EnvelopePolynomial& poly, const Enclosure& lo, const Enclosure& hi, Sign claimed,
                             const SignOptions& options) {
  SignOptions o = options;
  SignCertificate cert = certify_sign_at(poly, lo, hi, claimed, o);
  while (cert.status == Status::Inconclusive && o.precision * 2 <= o.max_precision) {
    o.precision *= 2;
    cert = certify_sign_at(poly, lo, hi, claimed, o);
  }
  return cert;
}

Status replay(const SignCertificate& cert, const EnvelopePolynomial& poly, Precision precision) {
  if (cert.status != Status::Proven || cert.leaves.empty()) return Status::Inconclusive;
  const int want = static_cast<int>(cert.claimed);
  // coverage: chain from the interval start to its end with no gaps
  if (mpfr_cmp(cert.leaves.front().lo.get(), cert.lo.lo().get()) > 0) return Status::Inconclusive;
  if (mpfr_cmp(cert.leaves.back().hi.get(), cert.hi.hi().get()) < 0) return Status::Inconclusive;
  for (std::size_t i = 1; i < cert.leaves.size(); ++i)
    if (!mpfr_equal_p(cert.leaves[i - 1].hi.get(), cert.leaves[i].lo.get())) return Status::Inconclusive;

  Status out = Status::Proven;
  for (const auto& leaf : cert.leaves) {
    if (leaf.kind == LeafKind::Dominance) {
      const auto lead = leading_term(poly.terms());
      if (!lead || poly.terms()[*lead].value.strict_sign() != want ||
          !dominates_at(poly.terms(), *lead, leaf.hi, precision))
        out = combine(out, Status::Inconclusive);
      continue;
    }
    const auto s = eval_on(poly, leaf.lo, leaf.hi, precision).strict_sign();
    if (s == -want) return Status::Refuted;
    if (s != want) out = combine(out, Status::Inconclusive);
  }
  return out;
}

}  // namespace sinc::certify
