#include "sinc/exactnum/elementary.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "sinc/errors.hpp"
#include "sinc/series/coefficients.hpp"

namespace sinc::exactnum {

namespace {

constexpr int kMaxSeriesTerms = 256;  // B_512 is the top of the Bernoulli table
constexpr int kMaxTaylorTerms = 100000;

Enclosure one(Precision p) { return Enclosure::from_integer(1, p); }

// |v| < 2^-bits * reference, used as a relative stopping rule.
bool negligible(const Enclosure& term, const BigFloat& reference, Precision bits) {
  BigFloat scaled(reference.precision());
  mpfr_mul_2si(scaled.get(), reference.get(), -bits, MPFR_RNDD);
  if (mpfr_zero_p(scaled.get())) {
    mpfr_set_ui_2exp(scaled.get(), 1, -bits, MPFR_RNDD);
  }
  BigFloat mag = term.magnitude();
  return mpfr_less_p(mag.get(), scaled.get()) != 0;
}

Enclosure symmetric(const BigFloat& radius) {
  BigFloat lo(radius.precision());
  mpfr_neg(lo.get(), radius.get(), MPFR_RNDD);
  return Enclosure(std::move(lo), radius);
}

// Alternating Taylor series for sin / cos at |t| <= 2; the remainder is bounded
// by the first omitted term because the terms decrease from k = 1 onwards.
Enclosure sin_taylor(const Enclosure& t) {
  const Precision w = t.precision();
  if (t.is_exact_zero()) return t;
  const Enclosure t2 = square(t);
  Enclosure term = t;
  Enclosure sum = t;
  const BigFloat reference = t.mignitude();
  for (int k = 0; k < kMaxTaylorTerms; ++k) {
    term = term * t2 / Rational(static_cast<long>((2 * k + 2) * (2 * k + 3)));
    if (k >= 1 && negligible(term, reference, w)) {
      return sum + symmetric(term.magnitude());
    }
    sum = (k % 2 == 0) ? sum - term : sum + term;
  }
  throw CertificationError("sin Taylor series did not converge");
}

Enclosure cos_taylor(const Enclosure& t) {
  const Precision w = t.precision();
  const Enclosure t2 = square(t);
  Enclosure term = one(w);
  Enclosure sum = one(w);
  BigFloat reference(w, 1);
  mpfr_div_2ui(reference.get(), reference.get(), 4, MPFR_RNDD);
  for (int k = 0; k < kMaxTaylorTerms; ++k) {
    term = term * t2 / Rational(static_cast<long>((2 * k + 1) * (2 * k + 2)));
    if (k >= 2 && negligible(term, reference, w)) {
      return sum + symmetric(term.magnitude());
    }
    sum = (k % 2 == 0) ? sum - term : sum + term;
  }
  throw CertificationError("cos Taylor series did not converge");
}

// atanh(s) for |s| <= 1/3 with remainder |s|^{2N+3} / ((2N+3)(1 - s^2)).
Enclosure atanh_series(const Enclosure& s) {
  const Precision w = s.precision();
  if (s.is_exact_zero()) return s;
  const Enclosure s2 = square(s);
  Enclosure power = s;
  Enclosure sum = s;
  const BigFloat reference = s.mignitude();
  for (long k = 1; k < kMaxTaylorTerms; ++k) {
    power = power * s2;
    const Enclosure term = power / Rational(2 * k + 1);
    if (negligible(term, reference, w)) {
      const Enclosure tail = abs(power) / (one(w) - s2);
      return sum + symmetric(tail.hi());
    }
    sum = sum + term;
  }
  throw CertificationError("atanh series did not converge");
}

// Machin: atan(1/q) as an alternating series.
Enclosure atan_inverse(long q, Precision w) {
  const Rational q2(q * q);
  Enclosure power = Enclosure::from_rational(Rational(1, q), w);  // q^{-(2k+1)}
  Enclosure sum = power;
  for (long k = 1; k < kMaxTaylorTerms; ++k) {
    power = power / q2;
    const Enclosure term = power / Rational(2 * k + 1);
    BigFloat limit(w, 1);
    mpfr_mul_2si(limit.get(), limit.get(), -(w + 4), MPFR_RNDD);
    if (mpfr_less_p(term.hi().get(), limit.get())) {
      return sum + symmetric(term.hi());
    }
    sum = (k % 2 == 1) ? sum - term : sum + term;
  }
  throw CertificationError("atan series did not converge");
}

template <typename Compute>
Enclosure cached(std::map<Precision, Enclosure>& cache, std::mutex& mutex, Precision p, Compute compute) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  Enclosure value = compute();
  std::lock_guard lock(mutex);
  return cache.emplace(p, std::move(value)).first->second;
}

Enclosure ln_point(const BigFloat& v, Precision w) {
  if (mpfr_sgn(v.get()) <= 0) throw DomainError("logarithm of a non-positive number");
  BigFloat m(std::max(w, v.precision()));
  mpfr_set(m.get(), v.get(), MPFR_RNDN);  // exact: precision not reduced
  long e = mpfr_get_exp(m.get());
  mpfr_set_exp(m.get(), 0);  // m in [1/2, 1)
  if (mpfr_cmp_d(m.get(), 0.70710678) < 0) {
    mpfr_mul_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    --e;
  }
  const Enclosure mm = Enclosure::point(m).rounded_to(w);
  const Enclosure s = (mm - Rational(1)) / (mm + Rational(1));
  Enclosure result = ldexp(atanh_series(s), 1);
  if (e != 0) result = result + ln2_enclosure(w) * Rational(e);
  return result;
}

Enclosure sin_point(const BigFloat& v, Precision w) {
  const Enclosure x = Enclosure::point(v).rounded_to(w);
  if (mpfr_cmp_d(v.get(), 1.5) <= 0) return sin_taylor(x);
  return sin_taylor(pi_enclosure(w) - x);
}

Enclosure cos_point(const BigFloat& v, Precision w) {
  const Enclosure x = Enclosure::point(v).rounded_to(w);
  if (mpfr_cmp_d(v.get(), 1.0) <= 0) return cos_taylor(x);
  // cos v = sin(pi/2 - v), |pi/2 - v| <= pi/2
  const Enclosure t = ldexp(pi_enclosure(w), -1) - x;
  if (t.is_negative()) return -sin_taylor(-t);
  return sin_taylor(t);
}

// cos(v/2) without cancellation near v = pi.
Enclosure cos_half_point(const BigFloat& v, Precision w) {
  const Enclosure x = Enclosure::point(v).rounded_to(w);
  if (mpfr_cmp_d(v.get(), 2.0) <= 0) return cos_taylor(ldexp(x, -1));
  return sin_taylor(ldexp(pi_enclosure(w) - x, -1));
}

enum class Base { LnSinc, LnCosHalf };

// Enclosures of the x^{2k} coefficients, k = 1..count, at precision w.
std::vector<Enclosure> coefficient_enclosures(Base base, Precision w, int count) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, Precision>, std::vector<Enclosure>> cache;
  const auto key = std::make_pair(static_cast<int>(base), w);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end() && static_cast<int>(it->second.size()) >= count) {
      return {it->second.begin(), it->second.begin() + count};
    }
  }
  std::unique_lock lock(mutex);
  auto& slot = cache[key];
  for (int k = static_cast<int>(slot.size()) + 1; k <= count; ++k) {
    const Rational c = base == Base::LnSinc ? series::ln_sinc_coeff(k) : series::ln_cos_half_coeff(k);
    slot.push_back(Enclosure::from_rational(c, w));
  }
  return {slot.begin(), slot.begin() + count};
}

// Number of terms so that the geometric tail is below 2^-w, or -1 if that
// exceeds the Bernoulli table.
int series_terms_needed(const BigFloat& v, Precision w) {
  const double ratio = v.to_double() / 3.14159265358979;
  const double r = ratio * ratio * (1.0 + 1e-9);
  if (r <= 0.0) return 1;
  if (r >= 1.0) return -1;
  const double n = std::ceil((static_cast<double>(w) + 4.0) * std::log(2.0) / -std::log(r));
  if (n > kMaxSeriesTerms) return -1;
  return std::max(1, static_cast<int>(n));
}

// Both base series have negative coefficients, so the truncated sum is an
// upper bound and the tail only widens the interval downwards.
Enclosure series_point(Base base, const BigFloat& v, Precision w, int terms) {
  const Enclosure x = Enclosure::point(v).rounded_to(w);
  const Enclosure y = square(x);
  const auto coeffs = coefficient_enclosures(base, w, terms);
  Enclosure acc = coeffs.back();
  for (int k = terms - 1; k >= 1; --k) acc = acc * y + coeffs[static_cast<std::size_t>(k - 1)];
  acc = acc * y;
  const Enclosure tail = geometric_tail_bound(terms, x, Rational(1));
  BigFloat lo(w);
  mpfr_sub(lo.get(), acc.lo().get(), tail.hi().get(), MPFR_RNDD);
  return Enclosure(std::move(lo), acc.hi());
}

Enclosure ln_sinc_point(const BigFloat& v, Precision w, Route route) {
  const int terms = route == Route::Direct ? -1 : series_terms_needed(v, w);
  if (route == Route::Series && terms < 0) {
    throw DomainError("series route needs more terms than the Bernoulli table holds at this point");
  }
  if (terms > 0) return series_point(Base::LnSinc, v, w, terms);
  const Enclosure x = Enclosure::point(v).rounded_to(w);
  return ln_positive(sin_point(v, w) / x);
}

Enclosure ln_cos_half_point(const BigFloat& v, Precision w, Route route) {
  const int terms = route == Route::Direct ? -1 : series_terms_needed(v, w);
  if (route == Route::Series && terms < 0) {
    throw DomainError("series route needs more terms than the Bernoulli table holds at this point");
  }
  if (terms > 0) return series_point(Base::LnCosHalf, v, w, terms);
  return ln_positive(cos_half_point(v, w));
}

void require_open_zero_pi(const Enclosure& x) {
  if (!x.is_positive()) throw DomainError("argument must be > 0, got " + x.to_string(10));
  const Enclosure pi = pi_enclosure(x.precision());
  if (!certainly_less(x, pi)) throw DomainError("argument must be < pi, got " + x.to_string(10));
}

// For a function decreasing in x: image of [lo, hi] is [F(hi).lo, F(lo).hi].
template <typename PointFn>
Enclosure decreasing_image(const Enclosure& x, PointFn point) {
  const Precision p = x.precision();
  const Precision w = p + kGuardBits;
  if (x.is_point()) return point(x.lo(), w).rounded_to(p);
  const Enclosure at_lo = point(x.lo(), w);
  const Enclosure at_hi = point(x.hi(), w);
  return Enclosure(at_hi.lo(), at_lo.hi()).rounded_to(p);
}

template <typename PointFn>
Enclosure increasing_image(const Enclosure& x, PointFn point) {
  const Precision p = x.precision();
  const Precision w = p + kGuardBits;
  if (x.is_point()) return point(x.lo(), w).rounded_to(p);
  const Enclosure at_lo = point(x.lo(), w);
  const Enclosure at_hi = point(x.hi(), w);
  return Enclosure(at_lo.lo(), at_hi.hi()).rounded_to(p);
}

void require_delta(const Enclosure& delta) {
  if (!delta.is_positive() || mpfr_cmp_d(delta.hi().get(), 1.5) > 0) {
    throw DomainError("distance to pi must lie in (0, 3/2], got " + delta.to_string(10));
  }
}

}  // namespace

Rational zeta2_upper() { return Rational(329, 200); }

Enclosure pi_enclosure(Precision precision) {
  static std::mutex mutex;
  static std::map<Precision, Enclosure> cache;
  return cached(cache, mutex, precision, [precision] {
    const Precision w = precision + kGuardBits;
    const Enclosure pi = atan_inverse(5, w) * Rational(16) - atan_inverse(239, w) * Rational(4);
    return pi.rounded_to(precision);
  });
}

Enclosure ln2_enclosure(Precision precision) {
  static std::mutex mutex;
  static std::map<Precision, Enclosure> cache;
  return cached(cache, mutex, precision, [precision] {
    const Precision w = precision + kGuardBits;
    return ldexp(atanh_series(Enclosure::from_rational(Rational(1, 3), w)), 1).rounded_to(precision);
  });
}

Enclosure ln_positive(const Enclosure& y) {
  if (!y.is_positive()) throw DomainError("logarithm needs a strictly positive argument, got " + y.to_string(10));
  return increasing_image(y, [](const BigFloat& v, Precision w) { return ln_point(v, w); });
}

Enclosure sin_value(const Enclosure& x) {
  const Precision p = x.precision();
  const Precision w = p + kGuardBits;
  if (mpfr_sgn(x.lo().get()) < 0 || !certainly_less(Enclosure::point(x.hi()), pi_enclosure(p) + Rational(1, 1000000))) {
    throw DomainError("sin_value expects an argument inside [0, pi]");
  }
  const Enclosure a = sin_point(x.lo(), w);
  if (x.is_point()) return a.rounded_to(p);
  const Enclosure b = sin_point(x.hi(), w);
  if (mpfr_cmp_d(x.hi().get(), 1.5) <= 0) return Enclosure(a.lo(), b.hi()).rounded_to(p);
  if (mpfr_cmp_d(x.lo().get(), 1.6) >= 0) return Enclosure(b.lo(), a.hi()).rounded_to(p);
  const Enclosure h = hull(a, b);
  return Enclosure(h.lo(), BigFloat(p, 1)).rounded_to(p);
}

Enclosure cos_value(const Enclosure& x) {
  if (mpfr_sgn(x.lo().get()) < 0 ||
      !certainly_less(Enclosure::point(x.hi()), pi_enclosure(x.precision()) + Rational(1, 1000000))) {
    throw DomainError("cos_value expects an argument inside [0, pi]");
  }
  return decreasing_image(x, [](const BigFloat& v, Precision w) { return cos_point(v, w); });
}

Enclosure ln_sinc_value(const Enclosure& x, Route route) {
  require_open_zero_pi(x);
  return decreasing_image(x, [route](const BigFloat& v, Precision w) { return ln_sinc_point(v, w, route); });
}

Enclosure ln_cos_half_value(const Enclosure& x, Route route) {
  require_open_zero_pi(x);
  return decreasing_image(x, [route](const BigFloat& v, Precision w) { return ln_cos_half_point(v, w, route); });
}

Enclosure ln_sinc_near_pi(const Enclosure& delta) {
  require_delta(delta);
  return increasing_image(delta, [](const BigFloat& d, Precision w) {
    const Enclosure dd = Enclosure::point(d).rounded_to(w);
    return ln_positive(sin_taylor(dd)) - ln_positive(pi_enclosure(w) - dd);
  });
}

Enclosure ln_cos_half_near_pi(const Enclosure& delta) {
  require_delta(delta);
  return increasing_image(delta, [](const BigFloat& d, Precision w) {
    const Enclosure dd = Enclosure::point(d).rounded_to(w);
    return ln_positive(sin_taylor(ldexp(dd, -1)));
  });
}

Enclosure geometric_tail_bound(int terms, const Enclosure& x, const Rational& factor) {
  const Precision p = x.precision();
  const Enclosure ratio = square(abs(x) / pi_enclosure(p));
  const BigFloat& r = ratio.hi();
  if (mpfr_cmp_ui(r.get(), 1) >= 0) throw DomainError("tail bound needs |x| < pi");
  const Enclosure rr = Enclosure::point(r);
  const Enclosure bound = pow(rr, static_cast<unsigned>(terms + 1)) * (factor * zeta2_upper()) /
                          (Rational(terms + 1) * (one(p) - rr));
  return Enclosure::point(bound.hi());
}

}  // namespace sinc::exactnum
