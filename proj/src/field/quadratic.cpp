#include "relthue/field/quadratic.hpp"

#include "relthue/errors.hpp"

namespace relthue::field {

QuadraticRing QuadraticRing::for_radicand(long D) {
  if (D == 0 || D == 1) throw InvalidInput("quadratic radicand must differ from 0 and 1");
  for (long p = 2; p * p <= (D < 0 ? -D : D); ++p) {
    if (D % (p * p) == 0) throw InvalidInput("radicand " + std::to_string(D) + " is not squarefree");
  }
  QuadraticRing r;
  r.D = D;
  long mod4 = ((D % 4) + 4) % 4;
  if (mod4 == 1) {
    r.T = 1;
    r.N = (1 - D) / 4;
  } else {
    r.T = 0;
    r.N = -D;
  }
  return r;
}

QuadInt QuadInt::like(mpz_class a, mpz_class b) const {
  QuadInt q;
  q.a_ = std::move(a);
  q.b_ = std::move(b);
  q.T_ = T_;
  q.N_ = N_;
  return q;
}

QuadInt QuadInt::conj() const { return like(a_ + b_ * T_, -b_); }

mpz_class QuadInt::norm() const { return a_ * a_ + a_ * b_ * T_ + b_ * b_ * N_; }

QuadInt& QuadInt::operator+=(const QuadInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
  // (a + bw)(c + dw) = ac - N bd + (ad + bc + T bd) w
  mpz_class bd = b_ * o.b_;
  mpz_class na = a_ * o.a_ - bd * N_;
  mpz_class nb = a_ * o.b_ + b_ * o.a_ + bd * T_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadInt& QuadInt::operator*=(const mpz_class& s) {
  a_ *= s;
  b_ *= s;
  return *this;
}

std::string QuadInt::to_string() const { return "(" + a_.get_str() + "," + b_.get_str() + ")"; }

QuadInt exact_div(const QuadInt& x, const QuadInt& y) {
  mpz_class n = y.norm();
  if (n == 0) throw std::domain_error("division by zero in quadratic ring");
  QuadInt num = x * y.conj();
  if (!mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t())) {
    throw std::domain_error("inexact division in quadratic ring");
  }
  mpz_class a, b;
  mpz_divexact(a.get_mpz_t(), num.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), num.b().get_mpz_t(), n.get_mpz_t());
  return x.like(std::move(a), std::move(b));
}

mpz_class exact_div(const mpz_class& x, const mpz_class& y) {
  if (y == 0) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) throw std::domain_error("inexact division");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

int sign_with_sqrt(const mpz_class& u, const mpz_class& v, long D) {
  int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // Opposite signs: compare u^2 with v^2 D.
  mpz_class lhs = u * u;
  mpz_class rhs = v * v * D;
  int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? su : sv);
}

int sign_real(const QuadInt& x, const QuadraticRing& ring) {
  if (ring.D <= 0) throw std::domain_error("sign_real needs a real quadratic field");
  if (ring.T == 0) return sign_with_sqrt(x.a(), x.b(), ring.D);
  // a + b(1 + sqrt D)/2 has the sign of (2a + b) + b sqrt D
  return sign_with_sqrt(2 * x.a() + x.b(), x.b(), ring.D);
}

}  // namespace relthue::field
