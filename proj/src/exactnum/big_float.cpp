#include "sinc/exactnum/big_float.hpp"

#include <cstdlib>
#include <utility>

#include "sinc/errors.hpp"

namespace sinc::exactnum {

BigFloat::BigFloat(Precision precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(Precision precision, long value) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_hex() const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%Ra", value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

BigFloat BigFloat::from_hex(const std::string& text, Precision precision, mpfr_rnd_t rnd) {
  BigFloat out(precision);
  char* end = nullptr;
  mpfr_strtofr(out.value_, text.c_str(), &end, 0, rnd);
  if (end == text.c_str() || *end != '\0') {
    throw DomainError("malformed hex float '" + text + "'");
  }
  return out;
}

std::string BigFloat::to_decimal(int digits) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Rg", digits, value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace sinc::exactnum
