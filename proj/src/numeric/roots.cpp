#include "relthue/numeric/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "relthue/errors.hpp"

namespace relthue::numeric {

namespace {

using cd = std::complex<double>;

constexpr int kMaxPrecisionDoublings = 5;

Real power_of_ten_down(long e) {
  Real r(64);
  mpfr_set_ui(r.raw(), 10, MPFR_RNDN);
  Real out(64);
  mpfr_pow_si(out.raw(), r.raw(), e, MPFR_RNDD);
  return out;
}

// Exponent of max(|re|, |im|) of a midpoint; LONG_MIN for zero.
long magnitude_exponent(const CBall& z) {
  return std::max(z.re().mid().exponent(), z.im().mid().exponent());
}

std::vector<cd> double_aberth(const std::vector<CBall>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<cd> a(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    a[i] = cd(coeffs[i].re().to_double(), coeffs[i].im().to_double());
  }
  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[static_cast<size_t>(i)] / a.back()));
  bound = std::min(1.0 + bound, 1e150);

  std::vector<cd> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<size_t>(k)] = std::polar(bound, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      cd x = z[static_cast<size_t>(i)];
      cd p = 0.0, dp = 0.0;
      for (int k = n; k >= 0; --k) {
        dp = dp * x + p;
        p = p * x + a[static_cast<size_t>(k)];
      }
      if (p == 0.0) continue;
      cd ratio = p / dp;
      cd sum = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (x - z[static_cast<size_t>(j)]);
      }
      cd w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[static_cast<size_t>(i)] = x - w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(x)));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

CBall to_cball(const cd& v, Precision prec) {
  Real re(prec), im(prec);
  mpfr_set_d(re.raw(), v.real(), MPFR_RNDN);
  mpfr_set_d(im.raw(), v.imag(), MPFR_RNDN);
  return CBall(Ball::from_real(re), Ball::from_real(im));
}

// Multiprecision Aberth iteration on midpoints.
void aberth_polish(const std::vector<CBall>& coeffs, std::vector<CBall>& z, Precision prec) {
  const size_t n = z.size();
  const int max_iter = 60 + static_cast<int>(prec / 16);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (size_t i = 0; i < n; ++i) {
      CBall p(prec), dp(prec);
      evaluate_with_derivative(coeffs, z[i], p, dp);
      p = p.mid_only();
      dp = dp.mid_only();
      if (p.re().mid().is_zero() && p.im().mid().is_zero()) continue;
      if (dp.re().mid().is_zero() && dp.im().mid().is_zero()) {
        converged = false;
        continue;
      }
      CBall ratio = (p / dp).mid_only();
      CBall sum(prec);
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        CBall diff = (z[i] - z[j]).mid_only();
        if (diff.re().mid().is_zero() && diff.im().mid().is_zero()) continue;
        sum += (CBall::exact(1, prec) / diff).mid_only();
        sum = sum.mid_only();
      }
      CBall den = (CBall::exact(1, prec) - (ratio * sum).mid_only()).mid_only();
      CBall w = ratio;
      if (!(den.re().mid().is_zero() && den.im().mid().is_zero())) w = (ratio / den).mid_only();
      long scale = std::max(magnitude_exponent(z[i]), 0L);
      z[i] = (z[i] - w).mid_only();
      long step = magnitude_exponent(w);
      if (step != LONG_MIN && step > scale - static_cast<long>(prec) + 8) converged = false;
    }
    if (converged) return;
  }
}

struct Certification {
  std::vector<Real> radii;
  bool isolated = false;
};

Certification certify(const std::vector<CBall>& coeffs, const std::vector<CBall>& z) {
  const size_t n = z.size();
  const Precision prec = coeffs.front().precision();
  Certification cert;
  const Ball lc_abs = abs(coeffs.back());
  for (size_t i = 0; i < n; ++i) {
    CBall p = evaluate(coeffs, z[i]);
    Ball den = lc_abs;
    for (size_t j = 0; j < n; ++j) {
      if (j != i) den *= abs(z[i] - z[j]);
    }
    if (!den.positive()) return cert;
    Ball r = Ball::exact(static_cast<long>(n), prec) * abs(p) / den;
    cert.radii.push_back(r.upper());
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      Real gap = abs(z[i] - z[j]).lower();
      Real reach = add(cert.radii[i], cert.radii[j], 64, MPFR_RNDU);
      if (!(reach < gap)) return cert;
    }
  }
  cert.isolated = true;
  return cert;
}

// Certifies that the unique root in disk i is real: the enlarged disk around
// Re(z_i) still misses every other disk, and p changes sign across it.
bool certify_real(const std::vector<CBall>& coeffs, const std::vector<CBall>& z,
                  const std::vector<Real>& radii, size_t i, Real& real_radius) {
  const Precision prec = coeffs.front().precision();
  Real im_abs = abs(z[i].im().mid(), 64, MPFR_RNDU);
  if (radii[i] < im_abs) return false;
  Real reach = add(radii[i], im_abs, 64, MPFR_RNDU);
  long scale = std::max(z[i].re().mid().exponent(), 0L);
  for (int widen = 24; widen <= 24 + 10 * 8; widen += 10) {
    Real probe = max(reach, Real::pow2(scale - static_cast<long>(prec) + widen));
    CBall c(Ball::from_real(z[i].re().mid()));
    bool isolated = true;
    for (size_t j = 0; j < z.size() && isolated; ++j) {
      if (j == i) continue;
      Real gap = abs(c - z[j]).lower();
      if (!(add(probe, radii[j], 64, MPFR_RNDU) < gap)) isolated = false;
    }
    if (!isolated) return false;
    Ball shift = Ball::from_real(probe);
    CBall left(c.re() - shift), right(c.re() + shift);
    Ball pl = evaluate(coeffs, left).re();
    Ball pr = evaluate(coeffs, right).re();
    if ((pl.negative() && pr.positive()) || (pl.positive() && pr.negative())) {
      real_radius = reach;
      return true;
    }
  }
  return false;
}

}  // namespace

CBall Root::value() const {
  Ball re(center.re().mid(), radius);
  Ball im = real ? Ball(center.im().mid(), Real(Ball::kRadiusBits)) : Ball(center.im().mid(), radius);
  return CBall(std::move(re), std::move(im));
}

RootSet::RootSet(std::vector<Root> roots) : roots_(std::move(roots)) {
  all_real_ = !roots_.empty() &&
              std::all_of(roots_.begin(), roots_.end(), [](const Root& r) { return r.real; });
}

int RootSet::digits() const {
  int d = 0;
  for (const auto& r : roots_) d = std::max(d, r.digits);
  return d;
}

RootSet RootSet::refined(int target_digits) const {
  std::vector<Root> out;
  out.reserve(roots_.size());
  for (const auto& r : roots_) out.push_back(refine(r, target_digits));
  return RootSet(std::move(out));
}

RootSet find_roots(const PolyZ& p, int digits) {
  if (p.degree() < 1) throw InvalidInput("polynomial must have degree >= 1");
  if (!p.is_squarefree()) throw NotSquarefree(p.to_string() + " has a repeated root");
  return find_roots(PolySpec::from(p), digits);
}

RootSet find_roots(std::shared_ptr<const PolySpec> poly, int digits) {
  if (poly->degree < 1) throw InvalidInput("polynomial must have degree >= 1");
  digits = std::max(digits, 20);
  const Real max_radius = power_of_ten_down(5 - digits);

  std::vector<cd> start = double_aberth(poly->coefficients(64));
  Precision prec = bits_for_digits(digits);
  for (int attempt = 0; attempt <= kMaxPrecisionDoublings; ++attempt, prec *= 2) {
    std::vector<CBall> coeffs = poly->coefficients(prec);
    std::vector<CBall> z;
    for (const auto& s : start) z.push_back(to_cball(s, prec));
    aberth_polish(coeffs, z, prec);
    Certification cert = certify(coeffs, z);
    if (!cert.isolated) continue;
    if (std::any_of(cert.radii.begin(), cert.radii.end(),
                    [&](const Real& r) { return max_radius < r; })) {
      continue;
    }

    std::vector<Root> roots;
    for (size_t i = 0; i < z.size(); ++i) {
      Root r{poly, z[i], cert.radii[i], false, digits};
      Real real_radius(64);
      if (poly->real_coefficients && certify_real(coeffs, z, cert.radii, i, real_radius)) {
        r.real = true;
        r.center = CBall(Ball::from_real(z[i].re().mid()));
        r.radius = real_radius;
      }
      roots.push_back(std::move(r));
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
      if (a.center.re().mid() != b.center.re().mid()) return a.center.re().mid() < b.center.re().mid();
      return a.center.im().mid() < b.center.im().mid();
    });
    return RootSet(std::move(roots));
  }
  throw PrecisionExhausted("could not separate the roots at " + std::to_string(digits) +
                           " digits");
}

Root refine(const Root& root, int target_digits) {
  if (target_digits <= root.digits) return root;
  const Precision prec = bits_for_digits(target_digits);
  std::vector<CBall> coeffs = root.poly->coefficients(prec);
  CBall z = root.center.with_precision(prec).mid_only();

  for (int iter = 0; iter < 64 + static_cast<int>(prec / 8); ++iter) {
    CBall p(prec), dp(prec);
    evaluate_with_derivative(coeffs, z, p, dp);
    p = p.mid_only();
    dp = dp.mid_only();
    if (p.re().mid().is_zero() && p.im().mid().is_zero()) break;
    if (dp.contains_zero()) throw PrecisionExhausted("vanishing derivative while refining a root");
    CBall step = (p / dp).mid_only();
    long scale = std::max(magnitude_exponent(z), 0L);
    z = (z - step).mid_only();
    if (magnitude_exponent(step) < scale - static_cast<long>(prec) + 4) break;
  }

  CBall p(prec), dp(prec);
  evaluate_with_derivative(coeffs, z, p, dp);
  if (dp.contains_zero()) throw PrecisionExhausted("vanishing derivative while refining a root");
  Ball r = Ball::exact(root.poly->degree, prec) * abs(p) / abs(dp);
  Real radius = r.upper();
  Real reach = add(abs(z - root.center).upper(), radius, 64, MPFR_RNDU);
  if (root.radius < reach) {
    throw PrecisionExhausted("refined disk escapes the isolating disk");
  }
  if (power_of_ten_down(2 - target_digits) < radius) {
    throw PrecisionExhausted("refinement did not reach " + std::to_string(target_digits) +
                             " digits");
  }
  return Root{root.poly, z, radius, root.real, target_digits};
}

}  // namespace relthue::numeric
