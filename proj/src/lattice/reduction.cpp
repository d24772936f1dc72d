#include "relthue/lattice/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "relthue/errors.hpp"

namespace relthue::lattice {

namespace {

long bits_of(const mpz_class& z) { return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(std::max(0L, e)));
  return r;
}

Real exact_real(const mpz_class& z) {
  return Real::from_mpz(z, std::max<Precision>(64, static_cast<Precision>(bits_of(z) + 2)));
}

// log10 of a positive integer, accurate to a few ulps of the mantissa.
double log10_of(const mpz_class& z) {
  if (z <= 0) return 0.0;
  long e = 0;
  double mant = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log10(mant) + static_cast<double>(e) * std::log10(2.0);
}

}  // namespace

int digits_for(const mpz_class& H, int floor_digits) {
  int d = static_cast<int>(mpz_sizeinbase(H.get_mpz_t(), 10)) + 30;
  return std::max(d, floor_digits);
}

ScaledLattice build_lattice(const ProblemInstance& inst, int i, const mpz_class& H, int digits, const mpz_class& A0) {
  if (H < 1) throw InvalidInput("H must be >= 1");
  const int m = inst.m();
  const size_t ui = static_cast<size_t>(i);
  const Precision prec = numeric::bits_for_digits(digits) + static_cast<Precision>(bits_of(H));
  std::vector<CBall> alphas = inst.alphas(digits);
  std::vector<CBall> lambdas = inst.lambdas(digits);
  std::vector<CBall> w = inst.field().basis(prec);

  std::vector<CBall> v;
  for (int k = 0; k < m; ++k) v.push_back(w[static_cast<size_t>(k)]);
  for (int k = 0; k < m; ++k) v.push_back(alphas[ui] * w[static_cast<size_t>(k)]);
  // Homogeneous: no constant column, otherwise (0, ..., 0, s) is itself short.
  const bool homogeneous = inst.homogeneous();
  if (!homogeneous) v.push_back(lambdas[ui]);

  const bool real = inst.field().real_basis() && inst.source().alpha_real(i) && inst.source().lambda_real(i);
  ScaledLattice L;
  L.scale = kIdentityScale;
  L.H = H;
  L.digits = digits;
  L.magnified_rows = real ? 1 : 2;

  const size_t dim = v.size();
  const size_t rows = dim + static_cast<size_t>(L.magnified_rows);
  const Ball sH = Ball::from_mpz(L.scale * H, prec);
  const Real half = Real::pow2(-1);
  Real max_rad(64);
  for (size_t c = 0; c < dim; ++c) {
    IntVector col(rows, 0);
    col[c] = L.scale;
    for (int r = 0; r < L.magnified_rows; ++r) {
      Ball part = (r == 0 ? v[c].re() : v[c].im()).with_precision(prec) * sH;
      if (!(part.rad() <= half)) {
        throw PrecisionExhausted("lattice entry enclosure too wide at " + std::to_string(digits) + " digits");
      }
      max_rad = numeric::max(max_rad, part.rad());
      col[dim + static_cast<size_t>(r)] = part.mid().round();
    }
    L.basis.push_back(std::move(col));
  }

  // Each magnified coordinate of a solution vector is off by at most
  // sum |coefficient| * (1/2 + max_rad) <= (2m A0 + 1)(1/2 + max_rad).
  const Precision p = static_cast<Precision>(bits_of(A0) + 64);
  Real coeff = exact_real(2 * m * A0 + (homogeneous ? 0 : 1));
  Real per_entry = numeric::add(half, max_rad, 64, MPFR_RNDU);
  Real total = numeric::mul(coeff, per_entry, p, MPFR_RNDU);
  L.rounding_slack = numeric::div(total, exact_real(L.scale), 64, MPFR_RNDU);
  return L;
}

ReductionStep reduction_step(const ProblemInstance& inst, const ConstantsTable& tbl, int i, const mpz_class& A0_in,
                             const mpz_class& H, int digits) {
  if (!inst.reducible()) {
    throw FeasibilityError("n = " + std::to_string(inst.n()) + " <= 2m + k + 1 = " +
                           std::to_string(2 * inst.m() + inst.k() + 1) + ": reduction cannot contract");
  }
  const int m = inst.m();
  const int n = inst.n();
  const int k = inst.k();
  ReductionStep st;
  st.A0_in = A0_in;
  st.H = H;
  st.digits = digits;

  ScaledLattice L = build_lattice(inst, i, H, digits, A0_in);
  LllResult red = lll_reduce(L.basis, kReductionDelta);
  st.lll_runs = 1;
  const mpz_class b1sq = norm2(red.basis.front());

  const Precision prec =
      std::max<Precision>(256, static_cast<Precision>(2 * bits_of(A0_in) + 2 * bits_of(L.scale) + 128));
  const Ball A = Ball::from_mpz(A0_in, prec);
  const Ball one = Ball::exact(1, prec);
  Ball cl = Ball::from_real(tbl.c_lambda).with_precision(prec);
  Ball lam_term = numeric::max(one, cl * cl);
  Ball rho = Ball::from_real(L.rounding_slack).with_precision(prec) *
             numeric::sqrt(Ball::exact(L.magnified_rows, prec));
  Ball half_sqrt3 = numeric::sqrt(Ball::exact(3, prec)) / Ball::exact(2, prec);
  Ball tail = rho + half_sqrt3 * A;
  Ball inner = Ball::exact(2 * m, prec) * A * A + tail * tail;
  if (!inst.homogeneous()) inner += lam_term;
  const int dim = static_cast<int>(L.basis.size());
  const mpq_class alpha = 1 / (kReductionDelta - mpq_class(1, 4));
  Ball lll_factor = numeric::pow(Ball::from_mpq(alpha, prec), static_cast<unsigned long>(dim - 1));
  Ball required_unscaled_sq = lll_factor * inner;
  Ball s = Ball::from_mpz(L.scale, prec);
  Ball required_sq = required_unscaled_sq * s * s;

  st.b1_required = numeric::sqrt(required_unscaled_sq).upper();
  st.b1_norm = (numeric::sqrt(Ball::from_mpz(b1sq, static_cast<Precision>(bits_of(b1sq) + 64))) /
                Ball::from_mpz(L.scale, 64))
                   .lower();
  st.gate_passed = !(exact_real(b1sq) < required_sq.upper());
  if (!st.gate_passed) return st;

  // A <= (2 c9 H / (sqrt(3) A0))^(1/(n-k-1))
  const Precision hp = std::max<Precision>(256, static_cast<Precision>(bits_of(H) + bits_of(A0_in) + 128));
  Ball base = Ball::exact(2, hp) * Ball::from_real(tbl.c9[static_cast<size_t>(i)]).with_precision(hp) *
              Ball::from_mpz(H, hp) / (numeric::sqrt(Ball::exact(3, hp)) * Ball::from_mpz(A0_in, hp));
  Ball bound = numeric::root(base, static_cast<unsigned long>(n - k - 1));
  st.A_new = bound.upper().floor();
  st.accepted = st.A_new < A0_in;
  return st;
}

ReductionTrace reduce_loop(const ProblemInstance& inst, const ConstantsTable& tbl, int i, const mpz_class& A0,
                           const ReductionOptions& opt) {
  ReductionTrace trace;
  trace.i = i;
  const mpz_class tiny = tbl.tiny_threshold[static_cast<size_t>(i)].floor();
  mpz_class A = A0;
  if (A <= tiny) {
    trace.final_bound = tiny;
    return trace;
  }
  if (!inst.reducible()) {
    throw FeasibilityError("n = " + std::to_string(inst.n()) + " <= 2m + k + 1 = " +
                           std::to_string(2 * inst.m() + inst.k() + 1) + ": reduction cannot contract");
  }

  const int m = inst.m();
  const bool real = inst.field().real_basis() && inst.source().alpha_real(i) && inst.source().lambda_real(i);
  const double dim = 2.0 * m + (inst.homogeneous() ? 0.0 : 1.0);
  const double rows = real ? 1.0 : 2.0;

  for (int step = 1; step <= opt.max_steps; ++step) {
    // The covolume grows like H^rows, the first minimum like covolume^(1/dim).
    double log_required = log10_of(A) + m * std::log10(2.0) + 0.5 * std::log10(dim);
    long e0 = std::max(1L, static_cast<long>(std::ceil(dim / rows * log_required)));
    int runs = 0;
    auto attempt = [&](const mpz_class& H) {
      ReductionStep st = reduction_step(inst, tbl, i, A, H, digits_for(H, opt.digits_floor));
      runs += st.lll_runs;
      return st;
    };

    long e = e0;
    ReductionStep st = attempt(pow10(e));
    bool passed = st.gate_passed;
    if (passed) {
      for (int t = 1; t <= opt.max_h_decreases && e > 0; ++t) {
        ReductionStep lower = attempt(pow10(e - 1));
        if (!lower.gate_passed) break;
        st = std::move(lower);
        --e;
      }
    } else {
      for (int t = 1; t <= opt.max_h_increases && !passed; ++t) {
        st = attempt(pow10(++e));
        passed = st.gate_passed;
      }
    }
    // A_new grows like H^(1/(n-k-1)): the smallest passing mantissa matters
    // once the bound is small.
    if (passed && opt.refine_mantissa && e > 0) {
      for (long c = 2; c <= 9; ++c) {
        ReductionStep finer = attempt(c * pow10(e - 1));
        if (finer.gate_passed) {
          st = std::move(finer);
          break;
        }
      }
    }
    st.step_no = step;
    st.lll_runs = runs;
    if (!passed) {
      if (trace.steps.empty()) {
        throw NoProgress("no H up to 10^" + std::to_string(e0 + opt.max_h_increases) +
                         " satisfies the lattice gate for A0 = " + A.get_str() +
                         " (lambda_" + std::to_string(i + 1) + " may be an integral combination of 1 and alpha_" +
                         std::to_string(i + 1) + ", e.g. when f is reducible)");
      }
      break;
    }
    if (!st.accepted) break;
    const bool diminishing = mpz_class(st.A_new * 100) >= mpz_class(A * std::lround(opt.stop_ratio * 100));
    trace.steps.push_back(st);
    A = st.A_new;
    if (diminishing || A <= tiny) break;
  }
  trace.final_bound = A > tiny ? A : tiny;
  return trace;
}

}  // namespace relthue::lattice
