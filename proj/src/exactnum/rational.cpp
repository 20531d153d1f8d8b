#include "sinc/exactnum/rational.hpp"

#include <cctype>

#include "sinc/errors.hpp"

namespace sinc::exactnum {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw DomainError("malformed integer '" + std::string(s) + "'");
  }
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class ev = parse_integer(text.substr(e + 1));
    if (!ev.fits_slong_p() || ::abs(ev) > 100000) throw DomainError("exponent out of range");
    exponent = ev.get_si();
    text = text.substr(0, e);
  }

  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw DomainError("malformed decimal '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(text)) throw DomainError("malformed number '" + std::string(text) + "'");
    digits = std::string(text);
  }

  mpz_class num(digits, 10);
  if (negative) num = -num;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(num, ten_pow) : Rational(num * ten_pow, mpz_class(1));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(q_.get_den(), q_.get_num());
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

std::string Rational::to_string() const { return q_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational power_of_two(long exponent) {
  mpz_class p(1);
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(p, mpz_class(1));
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-exponent));
  return Rational(mpz_class(1), p);
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace sinc::exactnum
