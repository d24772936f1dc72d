#include "relthue/numeric/complex_ball.hpp"

namespace relthue::numeric {

std::string CBall::to_string(int digits) const {
  if (certainly_real()) return re_.to_string(digits);
  return "(" + re_.to_string(digits) + ") + i(" + im_.to_string(digits) + ")";
}

CBall& CBall::operator+=(const CBall& b) {
  re_ += b.re_;
  im_ += b.im_;
  return *this;
}

CBall& CBall::operator-=(const CBall& b) {
  re_ -= b.re_;
  im_ -= b.im_;
  return *this;
}

CBall& CBall::operator*=(const CBall& b) {
  if (b.certainly_real()) return *this *= b.re_;
  if (certainly_real()) {
    Ball r = re_;
    re_ = r * b.re_;
    im_ = r * b.im_;
    return *this;
  }
  Ball re = re_ * b.re_ - im_ * b.im_;
  Ball im = re_ * b.im_ + im_ * b.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CBall& CBall::operator*=(const Ball& b) {
  re_ *= b;
  if (!certainly_real()) im_ *= b;
  return *this;
}

CBall& CBall::operator/=(const CBall& b) {
  if (b.certainly_real()) {
    re_ /= b.re_;
    if (!certainly_real()) im_ /= b.re_;
    return *this;
  }
  Ball den = norm2(b);
  *this *= b.conj();
  re_ /= den;
  im_ /= den;
  return *this;
}

Ball norm2(const CBall& z) {
  if (z.certainly_real()) return z.re() * z.re();
  return z.re() * z.re() + z.im() * z.im();
}

Ball abs(const CBall& z) {
  if (z.certainly_real()) return abs(z.re());
  return sqrt(norm2(z));
}

CBall pow(const CBall& z, unsigned long e) {
  CBall result = CBall::exact(1, z.precision());
  CBall base = z;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace relthue::numeric
