#include "sinc/exactnum/enclosure.hpp"

#include <algorithm>
#include <utility>

#include "sinc/errors.hpp"

namespace sinc::exactnum {

namespace {

Precision max_prec(const Enclosure& a, const Enclosure& b) {
  return std::max(a.precision(), b.precision());
}

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Extremes of op over the four endpoint combinations.
Enclosure corners(const Enclosure& a, const Enclosure& b, BinaryOp op) {
  const Precision p = max_prec(a, b);
  BigFloat lo(p), hi(p), t(p);
  const mpfr_srcptr as[2] = {a.lo().get(), a.hi().get()};
  const mpfr_srcptr bs[2] = {b.lo().get(), b.hi().get()};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      op(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      op(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return Enclosure(std::move(lo), std::move(hi));
}

}  // namespace

Enclosure::Enclosure(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get())) throw DomainError("enclosure endpoint is NaN");
  if (mpfr_greater_p(lo_.get(), hi_.get())) throw DomainError("enclosure with lo > hi");
  if (hi_.precision() != lo_.precision()) {
    BigFloat h(lo_.precision());
    mpfr_set(h.get(), hi_.get(), MPFR_RNDU);
    hi_ = std::move(h);
  }
}

Enclosure Enclosure::from_rational(const Rational& q, Precision precision) {
  return Enclosure(round_down(q, precision), round_up(q, precision));
}

Enclosure Enclosure::from_integer(long v, Precision precision) {
  return from_rational(Rational(v), precision);
}

Enclosure Enclosure::point(const BigFloat& v) { return Enclosure(v, v); }

Enclosure Enclosure::spanning(const BigFloat& a, const BigFloat& b) {
  return mpfr_lessequal_p(a.get(), b.get()) ? Enclosure(a, b) : Enclosure(b, a);
}

std::optional<int> Enclosure::strict_sign() const {
  if (is_positive()) return 1;
  if (is_negative()) return -1;
  return std::nullopt;
}

bool Enclosure::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.get(), q.get().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get().get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& inner) const {
  return mpfr_lessequal_p(lo_.get(), inner.lo_.get()) && mpfr_greaterequal_p(hi_.get(), inner.hi_.get());
}

BigFloat Enclosure::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat Enclosure::midpoint() const {
  BigFloat m(precision());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  if (mpfr_less_p(m.get(), lo_.get())) mpfr_set(m.get(), lo_.get(), MPFR_RNDN);
  if (mpfr_greater_p(m.get(), hi_.get())) mpfr_set(m.get(), hi_.get(), MPFR_RNDN);
  return m;
}

BigFloat Enclosure::magnitude() const {
  BigFloat m(precision());
  if (mpfr_cmpabs(lo_.get(), hi_.get()) > 0) {
    mpfr_abs(m.get(), lo_.get(), MPFR_RNDU);
  } else {
    mpfr_abs(m.get(), hi_.get(), MPFR_RNDU);
  }
  return m;
}

BigFloat Enclosure::mignitude() const {
  BigFloat m(precision());
  if (is_positive()) {
    mpfr_set(m.get(), lo_.get(), MPFR_RNDD);
  } else if (is_negative()) {
    mpfr_neg(m.get(), hi_.get(), MPFR_RNDD);
  }
  return m;
}

Enclosure Enclosure::rounded_to(Precision precision) const {
  BigFloat lo(precision), hi(precision);
  mpfr_set(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_set(hi.get(), hi_.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

std::string Enclosure::to_string(int digits) const {
  return "[" + lo_.to_decimal(digits) + ", " + hi_.to_decimal(digits) + "]";
}

Enclosure Enclosure::operator-() const {
  BigFloat lo(precision()), hi(precision());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  const Precision p = max_prec(a, b);
  BigFloat lo(p), hi(p);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  const Precision p = max_prec(a, b);
  BigFloat lo(p), hi(p);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) { return corners(a, b, &mpfr_mul); }

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) throw DomainError("division by an enclosure containing zero");
  return corners(a, b, &mpfr_div);
}

Enclosure operator+(const Enclosure& a, const Rational& b) {
  return a + Enclosure::from_rational(b, a.precision());
}
Enclosure operator-(const Enclosure& a, const Rational& b) {
  return a - Enclosure::from_rational(b, a.precision());
}
Enclosure operator*(const Enclosure& a, const Rational& b) {
  return a * Enclosure::from_rational(b, a.precision());
}
Enclosure operator/(const Enclosure& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return a / Enclosure::from_rational(b, a.precision());
}

Enclosure square(const Enclosure& x) {
  const Precision p = x.precision();
  BigFloat lo(p), hi(p);
  if (x.contains_zero()) {
    const BigFloat m = x.magnitude();
    mpfr_sqr(hi.get(), m.get(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
  }
  const BigFloat small = x.mignitude();
  const BigFloat big = x.magnitude();
  mpfr_sqr(lo.get(), small.get(), MPFR_RNDD);
  mpfr_sqr(hi.get(), big.get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure pow(const Enclosure& x, unsigned n) {
  Enclosure result = Enclosure::from_integer(1, x.precision());
  Enclosure base = x;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = square(base);
  }
  return result;
}

Enclosure sqrt(const Enclosure& x) {
  if (mpfr_sgn(x.lo().get()) < 0) throw DomainError("square root of an enclosure with negative part");
  BigFloat lo(x.precision()), hi(x.precision());
  mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure abs(const Enclosure& x) {
  if (x.is_positive() || mpfr_sgn(x.lo().get()) == 0) return x;
  if (x.is_negative() || mpfr_sgn(x.hi().get()) == 0) return -x;
  return Enclosure(BigFloat(x.precision()), x.magnitude());
}

Enclosure ldexp(const Enclosure& x, long k) {
  BigFloat lo = x.lo(), hi = x.hi();
  mpfr_mul_2si(lo.get(), lo.get(), k, MPFR_RNDD);
  mpfr_mul_2si(hi.get(), hi.get(), k, MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
  const Precision p = max_prec(a, b);
  BigFloat lo(p), hi(p);
  mpfr_min(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Enclosure(std::move(lo), std::move(hi));
}

Enclosure intersect(const Enclosure& a, const Enclosure& b) {
  const Precision p = max_prec(a, b);
  BigFloat lo(p), hi(p);
  mpfr_max(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDU);
  mpfr_min(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDD);
  if (mpfr_greater_p(lo.get(), hi.get())) throw DomainError("disjoint enclosures");
  return Enclosure(std::move(lo), std::move(hi));
}

bool certainly_less(const Enclosure& a, const Enclosure& b) {
  return mpfr_less_p(a.hi().get(), b.lo().get()) != 0;
}

bool certainly_less(const Enclosure& a, const Rational& b) {
  return mpfr_cmp_q(a.hi().get(), b.get().get_mpq_t()) < 0;
}

bool certainly_greater(const Enclosure& a, const Rational& b) {
  return mpfr_cmp_q(a.lo().get(), b.get().get_mpq_t()) > 0;
}

BigFloat round_down(const Rational& q, Precision precision) {
  BigFloat v(precision);
  mpfr_set_q(v.get(), q.get().get_mpq_t(), MPFR_RNDD);
  return v;
}

BigFloat round_up(const Rational& q, Precision precision) {
  BigFloat v(precision);
  mpfr_set_q(v.get(), q.get().get_mpq_t(), MPFR_RNDU);
  return v;
}

Rational to_rational(const BigFloat& v) {
  if (!mpfr_number_p(v.get())) throw DomainError("non-finite float has no rational value");
  mpz_class mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v.get());
  return Rational(mant, mpz_class(1)) * power_of_two(e);
}

}  // namespace sinc::exactnum
