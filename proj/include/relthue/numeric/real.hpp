#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>

namespace relthue::numeric {

using Precision = mpfr_prec_t;

/// Bits of working precision for a request of `digits` decimal digits. One
/// guard word of ten decimal digits is always added on top.
Precision bits_for_digits(int digits);

/// Decimal digits represented by `bits` (guard word not subtracted).
int digits_for_bits(Precision bits);

/// RAII owner of an mpfr_t with an explicit precision.
class Real {
 public:
  explicit Real(Precision prec = 64);
  Real(long value, Precision prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_mpz(const mpz_class& z, Precision prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from_mpq(const mpq_class& q, Precision prec, mpfr_rnd_t rnd = MPFR_RNDN);
  /// Parses decimal or "aEb" text. Returns false in `exact` if rounding occurred.
  static Real from_string(const std::string& text, Precision prec, mpfr_rnd_t rnd,
                          bool* exact = nullptr);
  /// 2^e exactly.
  static Real pow2(long e, Precision prec = 64);

  Precision precision() const { return mpfr_get_prec(value_); }
  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with value = f * 2^e, 0.5 <= |f| < 1. Zero maps to LONG_MIN.
  long exponent() const;

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  mpz_class floor() const;
  mpz_class ceil() const;
  mpz_class round() const;

  /// Exact comparison of the stored values.
  friend std::strong_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

// Directed-rounding helpers. The result precision is given explicitly.
Real add(const Real& a, const Real& b, Precision prec, mpfr_rnd_t rnd);
Real sub(const Real& a, const Real& b, Precision prec, mpfr_rnd_t rnd);
Real mul(const Real& a, const Real& b, Precision prec, mpfr_rnd_t rnd);
Real div(const Real& a, const Real& b, Precision prec, mpfr_rnd_t rnd);
Real sqrt(const Real& a, Precision prec, mpfr_rnd_t rnd);
Real abs(const Real& a, Precision prec, mpfr_rnd_t rnd);
Real rootn(const Real& a, unsigned long n, Precision prec, mpfr_rnd_t rnd);
Real pow_ui(const Real& a, unsigned long e, Precision prec, mpfr_rnd_t rnd);
Real log10(const Real& a, Precision prec, mpfr_rnd_t rnd);
const Real& max(const Real& a, const Real& b);
const Real& min(const Real& a, const Real& b);

}  // namespace relthue::numeric
