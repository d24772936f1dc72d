#include "relthue/numeric/real.hpp"

#include <climits>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace relthue::numeric {

namespace {
constexpr int kGuardDigits = 10;
constexpr double kLog2Of10 = 3.3219280948873623;
}  // namespace

Precision bits_for_digits(int digits) {
  if (digits < 1) digits = 1;
  return static_cast<Precision>(std::ceil((digits + kGuardDigits) * kLog2Of10));
}

int digits_for_bits(Precision bits) {
  return static_cast<int>(std::floor(static_cast<double>(bits) / kLog2Of10));
}

Real::Real(Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_mpz(const mpz_class& z, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_z(r.value_, z.get_mpz_t(), rnd);
  return r;
}

Real Real::from_mpq(const mpq_class& q, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.value_, q.get_mpq_t(), rnd);
  return r;
}

Real Real::from_string(const std::string& text, Precision prec, mpfr_rnd_t rnd, bool* exact) {
  Real r(prec);
  char* end = nullptr;
  int t = mpfr_strtofr(r.value_, text.c_str(), &end, 10, rnd);
  if (end == text.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
  if (exact) *exact = (t == 0);
  return r;
}

Real Real::pow2(long e, Precision prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.value_, 1, e, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (mpfr_zero_p(value_)) return LONG_MIN;
  return mpfr_get_exp(value_);
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

mpz_class Real::floor() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

mpz_class Real::ceil() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDU);
  return z;
}

mpz_class Real::round() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDN);
  return z;
}

std::strong_ordering operator<=>(const Real& a, const Real& b) {
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Real add(const Real& a, const Real& b, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_add(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

Real sub(const Real& a, const Real& b, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_sub(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

Real mul(const Real& a, const Real& b, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_mul(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

Real div(const Real& a, const Real& b, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_div(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

Real sqrt(const Real& a, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_sqrt(r.raw(), a.raw(), rnd);
  return r;
}

Real abs(const Real& a, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_abs(r.raw(), a.raw(), rnd);
  return r;
}

Real rootn(const Real& a, unsigned long n, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_rootn_ui(r.raw(), a.raw(), n, rnd);
  return r;
}

Real pow_ui(const Real& a, unsigned long e, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_pow_ui(r.raw(), a.raw(), e, rnd);
  return r;
}

Real log10(const Real& a, Precision prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_log10(r.raw(), a.raw(), rnd);
  return r;
}

const Real& max(const Real& a, const Real& b) { return (a < b) ? b : a; }
const Real& min(const Real& a, const Real& b) { return (b < a) ? b : a; }

}  // namespace relthue::numeric
