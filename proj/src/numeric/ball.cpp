#include "relthue/numeric/ball.hpp"

#include <algorithm>
#include <stdexcept>

#include "relthue/errors.hpp"

namespace relthue::numeric {

namespace {

constexpr Precision kR = Ball::kRadiusBits;

// Upper bound on the error of a midpoint that was rounded to nearest.
Real rounding_error(const Real& m, int ternary) {
  if (ternary == 0 || m.is_zero()) return Real(kR);
  return Real::pow2(m.exponent() - static_cast<long>(m.precision()), kR);
}

Real abs_up(const Real& x) { return abs(x, kR, MPFR_RNDU); }

Real add_up(const Real& a, const Real& b) { return add(a, b, kR, MPFR_RNDU); }

Real mul_up(const Real& a, const Real& b) { return mul(a, b, kR, MPFR_RNDU); }

}  // namespace

Ball::Ball(Precision prec) : mid_(prec), rad_(kR) {}

Ball::Ball(Real mid, Real rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
  if (rad_.precision() != kR) {
    Real r(kR);
    mpfr_set(r.raw(), rad_.raw(), MPFR_RNDU);
    rad_ = std::move(r);
  }
  if (rad_.sign() < 0) throw std::invalid_argument("negative ball radius");
}

Ball Ball::exact(long v, Precision prec) { return Ball(Real(v, prec), Real(kR)); }

Ball Ball::from_mpz(const mpz_class& z, Precision prec) {
  Real m(prec);
  int t = mpfr_set_z(m.raw(), z.get_mpz_t(), MPFR_RNDN);
  Real e = rounding_error(m, t);
  return Ball(std::move(m), std::move(e));
}

Ball Ball::from_mpq(const mpq_class& q, Precision prec) {
  Real m(prec);
  int t = mpfr_set_q(m.raw(), q.get_mpq_t(), MPFR_RNDN);
  Real e = rounding_error(m, t);
  return Ball(std::move(m), std::move(e));
}

Ball Ball::from_decimal(const std::string& text, Precision prec) {
  Real m(prec);
  char* end = nullptr;
  int t = mpfr_strtofr(m.raw(), text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') {
    throw InvalidInput("not a decimal number: '" + text + "'");
  }
  Real e = rounding_error(m, t);
  return Ball(std::move(m), std::move(e));
}

Ball Ball::from_endpoints(const Real& lo, const Real& hi, Precision prec) {
  Real m(prec);
  mpfr_add(m.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  Real r1 = sub(hi, m, kR, MPFR_RNDU);
  Real r2 = sub(m, lo, kR, MPFR_RNDU);
  Real r = max(r1, r2);
  if (r.sign() < 0) r = Real(kR);
  return Ball(std::move(m), std::move(r));
}

Ball Ball::pi(Precision prec) {
  Real m(prec);
  int t = mpfr_const_pi(m.raw(), MPFR_RNDN);
  Real e = rounding_error(m, t);
  return Ball(std::move(m), std::move(e));
}

Real Ball::upper() const { return add(mid_, rad_, precision(), MPFR_RNDU); }

Real Ball::lower() const { return sub(mid_, rad_, precision(), MPFR_RNDD); }

bool Ball::contains_zero() const { return lower().sign() <= 0 && upper().sign() >= 0; }

bool Ball::positive() const { return lower().sign() > 0; }

bool Ball::negative() const { return upper().sign() < 0; }

bool Ball::contains(const Ball& other) const {
  return lower() <= other.lower() && other.upper() <= upper();
}

bool Ball::contains(const Real& x) const { return lower() <= x && x <= upper(); }

Ball Ball::with_precision(Precision prec) const {
  Real m(prec);
  int t = mpfr_set(m.raw(), mid_.raw(), MPFR_RNDN);
  Real e = add_up(rad_, rounding_error(m, t));
  return Ball(std::move(m), std::move(e));
}

Ball Ball::inflated(const Real& extra) const { return Ball(mid_, add_up(rad_, abs_up(extra))); }

std::string Ball::to_string(int digits) const {
  return mid_.to_string(digits) + " +/- " + rad_.to_string(3);
}

Ball Ball::operator-() const {
  Real m(mid_);
  mpfr_neg(m.raw(), m.raw(), MPFR_RNDN);
  return Ball(std::move(m), rad_);
}

Ball& Ball::operator+=(const Ball& b) {
  Precision p = std::max(precision(), b.precision());
  Real m(p);
  int t = mpfr_add(m.raw(), mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  Real r = add_up(add_up(rad_, b.rad_), rounding_error(m, t));
  mid_ = std::move(m);
  rad_ = std::move(r);
  return *this;
}

Ball& Ball::operator-=(const Ball& b) {
  Precision p = std::max(precision(), b.precision());
  Real m(p);
  int t = mpfr_sub(m.raw(), mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  Real r = add_up(add_up(rad_, b.rad_), rounding_error(m, t));
  mid_ = std::move(m);
  rad_ = std::move(r);
  return *this;
}

Ball& Ball::operator*=(const Ball& b) {
  Precision p = std::max(precision(), b.precision());
  Real m(p);
  int t = mpfr_mul(m.raw(), mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  Real r = add_up(mul_up(abs_up(mid_), b.rad_), mul_up(abs_up(b.mid_), rad_));
  r = add_up(r, mul_up(rad_, b.rad_));
  r = add_up(r, rounding_error(m, t));
  mid_ = std::move(m);
  rad_ = std::move(r);
  return *this;
}

Ball& Ball::operator/=(const Ball& b) {
  if (b.contains_zero()) {
    throw PrecisionExhausted("division by a ball that contains zero");
  }
  Precision p = std::max(precision(), b.precision());
  Real m(p);
  int t = mpfr_div(m.raw(), mid_.raw(), b.mid_.raw(), MPFR_RNDN);
  // |a/b - am/bm| <= (ar |bm| + |am| br) / (|bm| (|bm| - br))
  Real abm_dn = abs(b.mid_, kR, MPFR_RNDD);
  Real num = add_up(mul_up(rad_, abs_up(b.mid_)), mul_up(abs_up(mid_), b.rad_));
  Real gap = sub(abm_dn, b.rad_, kR, MPFR_RNDD);
  Real den = mul(abm_dn, gap, kR, MPFR_RNDD);
  Real r = div(num, den, kR, MPFR_RNDU);
  r = add_up(r, rounding_error(m, t));
  mid_ = std::move(m);
  rad_ = std::move(r);
  return *this;
}

Ball sqrt(const Ball& x) {
  Precision p = x.precision();
  if (x.negative()) throw std::domain_error("sqrt of a negative ball");
  Real lo = x.lower();
  if (lo.sign() > 0) {
    Real m(p);
    int t = mpfr_sqrt(m.raw(), x.mid().raw(), MPFR_RNDN);
    Real s1 = sqrt(x.mid(), kR, MPFR_RNDD);
    Real s2 = sqrt(lo, kR, MPFR_RNDD);
    Real r = div(x.rad(), add(s1, s2, kR, MPFR_RNDD), kR, MPFR_RNDU);
    r = add_up(r, rounding_error(m, t));
    return Ball(std::move(m), std::move(r));
  }
  Real u = sqrt(x.upper(), p, MPFR_RNDU);
  Real zero(p);
  return Ball::from_endpoints(zero, u, p);
}

Ball abs(const Ball& x) {
  if (x.lower().sign() >= 0) return x;
  if (x.upper().sign() <= 0) return -x;
  Precision p = x.precision();
  Real u = max(abs(x.lower(), p, MPFR_RNDU), abs(x.upper(), p, MPFR_RNDU));
  return Ball::from_endpoints(Real(p), u, p);
}

Ball pow(const Ball& x, unsigned long e) {
  Ball result = Ball::exact(1, x.precision());
  Ball base = x;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Ball root(const Ball& x, unsigned long q) {
  if (q == 1) return x;
  if (x.negative()) throw std::domain_error("root of a negative ball");
  Precision p = x.precision();
  Real lo = x.lower();
  if (lo.sign() < 0) lo = Real(p);
  Real a = rootn(lo, q, p, MPFR_RNDD);
  Real b = rootn(x.upper(), q, p, MPFR_RNDU);
  return Ball::from_endpoints(a, b, p);
}

Ball max(const Ball& a, const Ball& b) {
  if (certainly_leq(b, a)) return a;
  if (certainly_leq(a, b)) return b;
  Precision p = std::max(a.precision(), b.precision());
  return Ball::from_endpoints(max(a.lower(), b.lower()), max(a.upper(), b.upper()), p);
}

Ball min(const Ball& a, const Ball& b) {
  if (certainly_leq(a, b)) return a;
  if (certainly_leq(b, a)) return b;
  Precision p = std::max(a.precision(), b.precision());
  return Ball::from_endpoints(min(a.lower(), b.lower()), min(a.upper(), b.upper()), p);
}

}  // namespace relthue::numeric
