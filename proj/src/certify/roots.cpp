#include "sinc/certify/roots.hpp"

#include "sinc/certify/f_a.hpp"
#include "sinc/envelope/builders.hpp"
#include "sinc/errors.hpp"

namespace sinc::certify {

using exactnum::pi_enclosure;

BigFloat RootEnclosure::width() const {
  BigFloat w(std::max(lo.precision(), hi.precision()));
  mpfr_sub(w.get(), hi.hi().get(), lo.lo().get(), MPFR_RNDU);
  return w;
}

bool RootEnclosure::brackets(const Rational& q) const {
  const mpq_srcptr v = q.get().get_mpq_t();
  return mpfr_cmp_q(lo.lo().get(), v) <= 0 && mpfr_cmp_q(hi.hi().get(), v) >= 0;
}

namespace {

bool narrow_enough(const BigFloat& lo, const Enclosure& hi, const Rational& tol) {
  BigFloat w(hi.precision() + 64);
  mpfr_sub(w.get(), hi.hi().get(), lo.get(), MPFR_RNDU);
  return mpfr_cmp_q(w.get(), tol.get().get_mpq_t()) <= 0;
}

struct Evaluator {
  const Rational& a;
  Precision precision;
  int evals = 0;

  // Sign of f_a at a point, climbing to 4x precision before giving up.
  std::optional<int> sign_at(const BigFloat& x) {
    for (Precision p = precision; p <= 4 * precision; p *= 2) {
      ++evals;
      const auto s = eval_f_a(a, Enclosure::point(x).rounded_to(p)).strict_sign();
      if (s) return s;
    }
    return std::nullopt;
  }
};

// Complement-coordinate right end: pi - 2^-K with f_a > 0, K doubling.
std::optional<Enclosure> right_end(Evaluator& ev) {
  for (long k = 4; k <= (1L << 20); k *= 2) {
    const Enclosure delta = Enclosure::from_rational(exactnum::power_of_two(-k), ev.precision);
    ++ev.evals;
    if (eval_f_a_near_pi(ev.a, delta).is_positive()) return pi_enclosure(ev.precision) - delta;
  }
  return std::nullopt;
}

std::optional<BigFloat> left_end(Evaluator& ev) {
  BigFloat x(ev.precision, 1);
  for (int j = 0; j < 200; ++j, mpfr_div_2ui(x.get(), x.get(), 1, MPFR_RNDN)) {
    if (ev.sign_at(x) == -1) return x;
  }
  return std::nullopt;
}

}  // namespace

RootEnclosure find_x_a(const Rational& a, const Rational& tol, const XaOptions& options) {
  require_open_parameter_range(a);
  const Precision p = options.precision;
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
  if (tol < exactnum::power_of_two(-static_cast<long>(p / 2)))
    throw DomainError("tolerance below 2^(-precision/2); raise the precision");
  Evaluator ev{a, p};

  std::optional<BigFloat> lo;
  std::optional<Enclosure> hi;
  if (options.seed) {
    const auto& [n, c] = *options.seed;
    const Enclosure ce = Enclosure::from_rational(c, p);
    const auto env = envelope::natural_extension_bounds(a, n, ce, p);
    const Enclosure upper = Enclosure::from_integer(4, p);
    const auto r_right = smallest_positive_root(env.upper, upper, tol);
    const auto r_left = smallest_positive_root(env.lower, upper, tol);
    // P_L < f_a < P_R puts x_a between root(P_R) and root(P_L)
    if (r_right && ev.sign_at(r_right->lo.lo()) == -1) lo = r_right->lo.lo();
    if (r_left && certainly_less(r_left->hi, pi_enclosure(p))) {
      BigFloat h(r_left->hi.hi());
      if (ev.sign_at(h) == 1) hi = Enclosure::point(h);
    }
  }
  if (!lo) lo = left_end(ev);
  if (!hi) hi = right_end(ev);
  if (!lo || !hi) throw CertificationError("no certified sign change of f_a for a = " + a.to_string());

  BigFloat mid(p);
  while (!narrow_enough(*lo, *hi, tol)) {
    mpfr_add(mid.get(), lo->get(), hi->lo().get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    const auto s = ev.sign_at(mid);
    if (s == -1) {
      lo = mid;
    } else if (s == 1) {
      hi = Enclosure::point(mid);
    } else {
      // mid sits on the root to working accuracy; straddle it at tol/4
      const Enclosure q = Enclosure::from_rational(tol / Rational(4), p);
      BigFloat l(p), h(p);
      mpfr_sub(l.get(), mid.get(), q.hi().get(), MPFR_RNDD);
      mpfr_add(h.get(), mid.get(), q.hi().get(), MPFR_RNDU);
      if (ev.sign_at(l) == -1 && ev.sign_at(h) == 1) {
        lo = l;
        hi = Enclosure::point(h);
        break;
      }
      throw CertificationError("f_a sign undecided near " + mid.to_decimal(20));
    }
  }
  return RootEnclosure{Enclosure::point(*lo), *hi, -1, 1, ev.evals};
}

std::optional<RootEnclosure> smallest_positive_root(const EnvelopePolynomial& poly, const Enclosure& upper,
                                                    const Rational& tol, const SignOptions& options) {
  const Precision p = options.precision;
  if (poly.terms().empty()) throw DomainError("zero polynomial has no isolated roots");
  if (!poly.terms().back().value.is_positive()) throw DomainError("root search needs a positive leading coefficient");
  if (!upper.is_positive()) throw DomainError("root search bound must be positive");
  BigFloat end(p);
  mpfr_set(end.get(), upper.hi().get(), MPFR_RNDU);
  std::size_t lead = 0;
  const auto delta = dominance_radius(poly, end, p, &lead);
  if (!delta || !poly.terms()[lead].value.is_negative())
    throw DomainError("root search needs a polynomial negative right of zero");

  int evals = 0;
  auto value = [&](const BigFloat& l, const BigFloat& h) {
    ++evals;
    return poly.evaluate(Enclosure(l, h), p);
  };

  // left to right: certify P < 0 on prefixes, stop at the first leaf that
  // is narrow and positive at its right end
  struct Frame {
    BigFloat lo, hi;
    int depth;
  };
  std::vector<Frame> stack{{*delta, end, 0}};
  BigFloat mid(p);
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (value(f.lo, f.hi).is_negative()) continue;
    if (narrow_enough(f.lo, Enclosure::point(f.hi), tol) && value(f.hi, f.hi).is_positive())
      return RootEnclosure{Enclosure::point(f.lo), Enclosure::point(f.hi), -1, 1, evals};
    mpfr_add(mid.get(), f.lo.get(), f.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    const bool splittable = mpfr_less_p(f.lo.get(), mid.get()) && mpfr_less_p(mid.get(), f.hi.get());
    if (f.depth >= options.max_depth * 2 || !splittable)
      throw CertificationError("root isolation undecided near " + mid.to_decimal(17));
    stack.push_back({mid, f.hi, f.depth + 1});
    stack.push_back({f.lo, mid, f.depth + 1});
  }
  return std::nullopt;
}

}  // namespace sinc::certify
