#pragma once

#include <string>

#include "relthue/numeric/real.hpp"

namespace relthue::numeric {

/// Real ball: a midpoint at working precision plus a radius that bounds the
/// distance to the true value. Every operation rounds the radius upward and
/// adds the midpoint's own rounding error, so the enclosure is never lost.
class Ball {
 public:
  static constexpr Precision kRadiusBits = 64;

  explicit Ball(Precision prec = 64);
  Ball(Real mid, Real rad);

  static Ball exact(long v, Precision prec);
  static Ball from_mpz(const mpz_class& z, Precision prec);
  static Ball from_mpq(const mpq_class& q, Precision prec);
  /// Decimal text; inexact conversions get a one-ulp radius.
  static Ball from_decimal(const std::string& text, Precision prec);
  /// Smallest ball (at `prec`) containing [lo, hi].
  static Ball from_endpoints(const Real& lo, const Real& hi, Precision prec);
  static Ball from_real(const Real& x) { return Ball(x, Real(kRadiusBits)); }
  /// pi at the given precision.
  static Ball pi(Precision prec);

  const Real& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  Precision precision() const { return mid_.precision(); }

  Real upper() const;
  Real lower() const;

  bool contains_zero() const;
  bool positive() const;  // certainly > 0
  bool negative() const;  // certainly < 0
  /// `other` lies entirely inside this ball.
  bool contains(const Ball& other) const;
  bool contains(const Real& x) const;

  /// Radius zero copy of the midpoint (used inside iterations whose output is
  /// certified separately).
  Ball mid_only() const { return Ball(mid_, Real(kRadiusBits)); }
  Ball with_precision(Precision prec) const;
  /// Adds `extra` (>= 0) to the radius.
  Ball inflated(const Real& extra) const;

  double to_double() const { return mid_.to_double(); }
  std::string to_string(int digits = 20) const;

  Ball operator-() const;
  Ball& operator+=(const Ball& b);
  Ball& operator-=(const Ball& b);
  Ball& operator*=(const Ball& b);
  Ball& operator/=(const Ball& b);

  friend Ball operator+(Ball a, const Ball& b) { return a += b; }
  friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
  friend Ball operator*(Ball a, const Ball& b) { return a *= b; }
  friend Ball operator/(Ball a, const Ball& b) { return a /= b; }

 private:
  Real mid_;
  Real rad_;
};

Ball sqrt(const Ball& x);
Ball abs(const Ball& x);
Ball pow(const Ball& x, unsigned long e);
/// x^(1/q) for x >= 0 (throws if x is certainly negative).
Ball root(const Ball& x, unsigned long q);
Ball max(const Ball& a, const Ball& b);
Ball min(const Ball& a, const Ball& b);

inline bool certainly_less(const Ball& a, const Ball& b) { return a.upper() < b.lower(); }
inline bool certainly_leq(const Ball& a, const Ball& b) { return a.upper() <= b.lower(); }

}  // namespace relthue::numeric
