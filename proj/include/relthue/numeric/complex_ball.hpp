#pragma once

#include <string>

#include "relthue/numeric/ball.hpp"

namespace relthue::numeric {

/// Rectangular complex ball (independent real and imaginary enclosures).
class CBall {
 public:
  explicit CBall(Precision prec = 64) : re_(prec), im_(prec) {}
  CBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit CBall(Ball re) : re_(std::move(re)), im_(re_.precision()) {}

  static CBall exact(long v, Precision prec) { return CBall(Ball::exact(v, prec)); }
  static CBall from_mpz(const mpz_class& z, Precision prec) { return CBall(Ball::from_mpz(z, prec)); }

  const Ball& re() const { return re_; }
  const Ball& im() const { return im_; }
  Precision precision() const { return re_.precision(); }

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  /// Imaginary part certainly zero (radius zero and midpoint zero).
  bool certainly_real() const { return im_.mid().is_zero() && im_.rad().is_zero(); }
  bool contains(const CBall& other) const {
    return re_.contains(other.re_) && im_.contains(other.im_);
  }

  CBall mid_only() const { return CBall(re_.mid_only(), im_.mid_only()); }
  CBall with_precision(Precision prec) const {
    return CBall(re_.with_precision(prec), im_.with_precision(prec));
  }
  CBall conj() const { return CBall(re_, -im_); }
  /// Largest radius of the two parts.
  Real radius() const { return max(re_.rad(), im_.rad()); }

  std::string to_string(int digits = 20) const;

  CBall operator-() const { return CBall(-re_, -im_); }
  CBall& operator+=(const CBall& b);
  CBall& operator-=(const CBall& b);
  CBall& operator*=(const CBall& b);
  CBall& operator*=(const Ball& b);
  CBall& operator/=(const CBall& b);

  friend CBall operator+(CBall a, const CBall& b) { return a += b; }
  friend CBall operator-(CBall a, const CBall& b) { return a -= b; }
  friend CBall operator*(CBall a, const CBall& b) { return a *= b; }
  friend CBall operator*(CBall a, const Ball& b) { return a *= b; }
  friend CBall operator/(CBall a, const CBall& b) { return a /= b; }

 private:
  Ball re_;
  Ball im_;
};

/// |z|^2 as a real ball.
Ball norm2(const CBall& z);
/// |z| as a real ball.
Ball abs(const CBall& z);
CBall pow(const CBall& z, unsigned long e);

}  // namespace relthue::numeric
