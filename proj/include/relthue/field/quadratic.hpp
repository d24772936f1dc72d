#pragma once

#include <gmpxx.h>

#include <string>

namespace relthue::field {

/// Ring of integers of Q(sqrt(D)), D squarefree, D != 0, 1. The integral
/// basis is (1, w) with w = (1 + sqrt(D))/2 when D = 1 mod 4 and w = sqrt(D)
/// otherwise, so w^2 = T*w - N.
struct QuadraticRing {
  long D = 0;
  long T = 0;
  long N = 0;

  static QuadraticRing for_radicand(long D);
  bool imaginary() const { return D < 0; }
  friend bool operator==(const QuadraticRing&, const QuadraticRing&) = default;
};

/// a + b*w in a quadratic ring.
class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(mpz_class a, mpz_class b, const QuadraticRing& ring)
      : a_(std::move(a)), b_(std::move(b)), T_(ring.T), N_(ring.N) {}

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  QuadInt zero() const { return like(0, 0); }
  QuadInt one() const { return like(1, 0); }
  QuadInt like(mpz_class a, mpz_class b) const;

  /// Image under the nontrivial automorphism.
  QuadInt conj() const;
  /// Field norm a^2 + abT + b^2 N.
  mpz_class norm() const;

  QuadInt operator-() const { return like(-a_, -b_); }
  QuadInt& operator+=(const QuadInt& o);
  QuadInt& operator-=(const QuadInt& o);
  QuadInt& operator*=(const QuadInt& o);
  QuadInt& operator*=(const mpz_class& s);
  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
  friend QuadInt operator*(QuadInt x, const mpz_class& s) { return x *= s; }
  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

 private:
  mpz_class a_ = 0, b_ = 0;
  long T_ = 0, N_ = 0;
};

/// Quotient x / y, which must be exact in the ring (throws otherwise).
QuadInt exact_div(const QuadInt& x, const QuadInt& y);
inline bool is_zero(const QuadInt& x) { return x.is_zero(); }

/// Exact integer ring operations with the same vocabulary as QuadInt.
mpz_class exact_div(const mpz_class& x, const mpz_class& y);
inline bool is_zero(const mpz_class& x) { return x == 0; }

/// Sign of u + v*sqrt(D) for integers u, v and D > 0.
int sign_with_sqrt(const mpz_class& u, const mpz_class& v, long D);

/// Sign of the real embedding with sqrt(D) > 0 (requires D > 0).
int sign_real(const QuadInt& x, const QuadraticRing& ring);

}  // namespace relthue::field
