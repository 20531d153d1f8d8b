#pragma once

#include <string>

#include <mpfr.h>

namespace sinc::exactnum {

using Precision = mpfr_prec_t;

/// Owning handle for one MPFR number. Copies keep the source precision.
class BigFloat {
 public:
  explicit BigFloat(Precision precision);
  BigFloat(Precision precision, long value);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Precision precision() const { return mpfr_get_prec(value_); }

  /// Exact C99 hex-float rendering ("0x1.921fb54442d18p+1"), round-trips bit-exactly.
  std::string to_hex() const;
  static BigFloat from_hex(const std::string& text, Precision precision, mpfr_rnd_t rnd = MPFR_RNDN);

  /// Decimal rendering with the given number of significant digits (nearest).
  std::string to_decimal(int digits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

 private:
  mpfr_t value_;
};

inline int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()); }

}  // namespace sinc::exactnum
