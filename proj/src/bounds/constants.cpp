#include "relthue/bounds/constants.hpp"

#include <algorithm>

#include "relthue/errors.hpp"

namespace relthue {

namespace {

constexpr Precision kBits = 256;
constexpr int kDigits = 60;

Ball lower_ball(const Real& x) { return Ball::from_real(x).with_precision(kBits); }
Ball upper_ball(const Real& x) { return Ball::from_real(x).with_precision(kBits); }

Ball from_double(double v) {
  Real r(kBits);
  mpfr_set_d(r.raw(), v, MPFR_RNDN);
  return Ball::from_real(r);
}

// c4_i for a given eps, from the c1/c2/c3 rows of index i.
Real c4_for(int i, double eps, const ConstantsTable& t) {
  const int n = t.n;
  const Ball one = Ball::exact(1, kBits), two = Ball::exact(2, kBits);
  const Ball e = from_double(eps);
  Real best(64);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const size_t ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
    Ball c1 = lower_ball(t.c1[ui][uj]);
    Ball base = two * upper_ball(t.c2[ui][uj]) / (e * c1);
    // base^(n/(n-k))
    Ball branch2 = numeric::root(numeric::pow(base, static_cast<unsigned long>(n)),
                                 static_cast<unsigned long>(n - t.k));
    Ball branch3 = two * upper_ball(t.c3[ui][uj]) / ((one - e) * c1);
    Real u = numeric::max(branch2, branch3).upper();
    if (best < u) best = u;
  }
  return best;
}

}  // namespace

const Real& ConstantsTable::max_tiny_threshold() const {
  const Real* best = &tiny_threshold.front();
  for (const auto& t : tiny_threshold) {
    if (*best < t) best = &t;
  }
  return *best;
}

ConstantsTable compute_constants(const ProblemInstance& inst, const std::vector<double>& eps_in,
                                 bool optimize_eps) {
  const int n = inst.n();
  const int k = inst.k();
  if (k >= n) throw FeasibilityError("k >= n");
  std::vector<double> eps = eps_in.empty() ? std::vector<double>(static_cast<size_t>(n), 0.5) : eps_in;
  if (eps.size() == 1 && n > 1) eps.assign(static_cast<size_t>(n), eps.front());
  if (static_cast<int>(eps.size()) != n) throw InvalidInput("need one epsilon per linear factor");
  for (double e : eps) {
    if (!(e > 0.0 && e < 1.0)) throw InvalidInput("epsilon must lie in (0,1)");
  }

  std::vector<CBall> alpha = inst.alphas(kDigits), lambda = inst.lambdas(kDigits);
  for (auto& a : alpha) a = a.with_precision(std::max(a.precision(), kBits));
  for (auto& l : lambda) l = l.with_precision(std::max(l.precision(), kBits));

  ConstantsTable t;
  t.n = n;
  t.m = inst.m();
  t.k = k;
  t.c6 = inst.field().c6();
  t.c7 = inst.field().c7();
  t.c_lambda = inst.c_lambda();
  t.A0 = inst.A0();
  const size_t un = static_cast<size_t>(n);
  t.c1.assign(un, std::vector<Real>(un, Real(64)));
  t.c2 = t.c1;
  t.c3 = t.c1;

  const Ball one = Ball::exact(1, kBits);
  const Ball c0 = inst.rhs().c0(kBits);
  const Ball c0_root = numeric::root(c0, static_cast<unsigned long>(n));

  std::vector<Ball> abs_alpha;
  for (int i = 0; i < n; ++i) {
    Ball a = numeric::abs(alpha[static_cast<size_t>(i)]);
    if (a.contains_zero()) throw DegenerateAlpha("|alpha_" + std::to_string(i + 1) + "| cannot be separated from 0");
    abs_alpha.push_back(std::move(a));
  }

  for (int i = 0; i < n; ++i) {
    const size_t ui = static_cast<size_t>(i);
    Ball inv_i = one / abs_alpha[ui];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const size_t uj = static_cast<size_t>(j);
      Ball gap = numeric::abs(alpha[uj] - alpha[ui]);
      if (gap.contains_zero()) {
        throw DegenerateAlpha("alpha_" + std::to_string(i + 1) + " and alpha_" + std::to_string(j + 1) +
                              " cannot be separated");
      }
      t.c1[ui][uj] = (gap * numeric::min(one, inv_i)).lower();
      if (t.c1[ui][uj].sign() <= 0) throw DegenerateAlpha("c1 lower bound is not positive");
      t.c2[ui][uj] = (c0_root * numeric::max(one, abs_alpha[uj] * inv_i)).upper();
      Ball d1 = numeric::abs(lambda[uj] - lambda[ui]);
      Ball d2 = numeric::abs(alpha[ui] * lambda[uj] - alpha[uj] * lambda[ui]) * inv_i;
      t.c3[ui][uj] = numeric::max(d1, d2).upper();
    }
  }

  t.eps = eps;
  t.c4.assign(un, Real(64));
  for (int i = 0; i < n; ++i) {
    const size_t ui = static_cast<size_t>(i);
    t.c4[ui] = c4_for(i, eps[ui], t);
    if (optimize_eps) {
      for (int g = 1; g <= 9; ++g) {
        double e = g / 10.0;
        Real c = c4_for(i, e, t);
        if (c < t.c4[ui]) {
          t.c4[ui] = c;
          t.eps[ui] = e;
        }
      }
    }
  }

  const Ball two_pow = numeric::pow(Ball::exact(2, kBits), static_cast<unsigned long>(n - 1));
  const Ball c7 = upper_ball(t.c7);
  const Ball two_c_lambda = Ball::exact(2, kBits) * upper_ball(t.c_lambda);
  for (int i = 0; i < n; ++i) {
    const size_t ui = static_cast<size_t>(i);
    Ball prod = one;
    for (int j = 0; j < n; ++j) {
      if (j != i) prod *= lower_ball(t.c1[ui][static_cast<size_t>(j)]);
    }
    Ball c5 = two_pow * c0 / prod;
    t.c5.push_back(c5.upper());
    t.c8.push_back((upper_ball(t.c4[ui]) * c7).upper());
    t.c9.push_back((upper_ball(t.c5[ui]) * numeric::pow(c7, static_cast<unsigned long>(n - 1 - k))).upper());
    t.tiny_threshold.push_back(numeric::max(t.c8[ui], two_c_lambda.upper()));
  }
  return t;
}

Real small_factor_bound(int i, const mpz_class& A, const ConstantsTable& tbl) {
  const size_t ui = static_cast<size_t>(i);
  Real a = Real::from_mpz(A, kBits, MPFR_RNDD);
  if (a < tbl.tiny_threshold[ui]) {
    throw BelowThreshold("A = " + A.get_str() + " is below the tiny threshold " +
                         tbl.tiny_threshold[ui].to_string(8));
  }
  // c9 / A^(n-1-k), rounded up.
  const unsigned long e = static_cast<unsigned long>(tbl.n - 1 - tbl.k);
  Precision prec = std::max<Precision>(kBits, static_cast<Precision>(mpz_sizeinbase(A.get_mpz_t(), 2) * e + 64));
  Real den = numeric::pow_ui(a, e, prec, MPFR_RNDD);
  return numeric::div(tbl.c9[ui], den, 64, MPFR_RNDU);
}

}  // namespace relthue
