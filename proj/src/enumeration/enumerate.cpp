#include "relthue/enumeration/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "relthue/errors.hpp"

namespace relthue::enumeration {

namespace {

using cd = std::complex<double>;

constexpr int kDigits = 30;
constexpr double kSlack = 1e-12;

double upper_double(const Real& x) { return x.to_double(MPFR_RNDU); }

// Window radius: some |beta_j| is at most (c0 Z^k)^(1/n) for any solution.
double window_radius(const ProblemInstance& inst, double A) {
  const Precision prec = 128;
  Ball rhs = inst.rhs().c0(prec);
  if (inst.k() > 0) {
    Ball Z = Ball::from_real(inst.field().c6()).with_precision(prec) * Ball::exact(static_cast<long>(A), prec);
    rhs *= numeric::pow(Z, static_cast<unsigned long>(inst.k()));
  }
  return upper_double(numeric::root(rhs, static_cast<unsigned long>(inst.n())).upper()) * (1 + 1e-9);
}

// Advances an odometer over [-A, A]^size; false when it wraps around.
bool advance(std::vector<long>& v, long A) {
  for (auto& c : v) {
    if (c < A) {
      ++c;
      return true;
    }
    c = -A;
  }
  return false;
}

Coords to_coords(long first, const std::vector<long>& rest) {
  Coords c;
  c.emplace_back(first);
  for (long v : rest) c.emplace_back(v);
  return c;
}

Coords to_coords(const std::vector<long>& v) {
  Coords c;
  for (long x : v) c.emplace_back(x);
  return c;
}

}  // namespace

bool canonical_less(const CandidateSolution& a, const CandidateSolution& b) {
  if (a.x != b.x) return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
  return std::lexicographical_compare(a.y.begin(), a.y.end(), b.y.begin(), b.y.end());
}

bool SolutionSet::contains(const Coords& x, const Coords& y) const {
  CandidateSolution key;
  key.x = x;
  key.y = y;
  return std::binary_search(solutions.begin(), solutions.end(), key, canonical_less);
}

double enumeration_work(const ProblemInstance& inst, const mpz_class& A_R) {
  const double A = A_R.get_d();
  const double side = 2 * A + 1;
  const int m = inst.m();
  const double outer = std::pow(side, 2 * m - 1);
  if (!std::isfinite(outer)) return HUGE_VAL;
  const double r = window_radius(inst, std::min(A, 1e15));
  const double per = std::min(side, inst.n() * (2 * r + 3));
  return outer * (per + inst.n());
}

SolutionSet enumerate_tiny(const ProblemInstance& inst, const mpz_class& A_R, const EnumerationOptions& opt) {
  if (A_R < 0) throw InvalidInput("enumeration bound must be nonnegative");
  const double work = enumeration_work(inst, A_R);
  if (work > opt.budget) throw BudgetExceeded(work, opt.budget);

  SolutionSet out;
  out.enumeration_bound = A_R;
  const long A = A_R.get_si();
  const int m = inst.m(), n = inst.n(), k = inst.k();
  const GroundField& F = inst.field();

  // Double-precision copies of everything the filter needs.
  const Precision prec = numeric::bits_for_digits(kDigits);
  std::vector<cd> alpha, lambda;
  for (const auto& a : inst.alphas(kDigits)) alpha.emplace_back(a.re().to_double(), a.im().to_double());
  for (const auto& l : inst.lambdas(kDigits)) lambda.emplace_back(l.re().to_double(), l.im().to_double());
  field::ComplexMatrix S = F.conjugate_matrix(prec);
  std::vector<std::vector<cd>> Sd(S.size());
  for (size_t r = 0; r < S.size(); ++r) {
    for (const auto& z : S[r]) Sd[r].emplace_back(z.re().to_double(), z.im().to_double());
  }
  const std::vector<cd>& w = Sd.front();
  auto house = [&](double first, const std::vector<long>& rest) {
    double best = 0;
    for (const auto& row : Sd) {
      cd v = first * row[0];
      for (size_t t = 0; t < rest.size(); ++t) v += static_cast<double>(rest[t]) * row[t + 1];
      best = std::max(best, std::abs(v));
    }
    return best * (1 + kSlack) + kSlack;
  };

  const double c0_up = upper_double(inst.rhs().c0(128).upper()) * (1 + kSlack);
  const double r = window_radius(inst, static_cast<double>(A));
  const Verifier verify(inst);

  std::vector<double> q_re(static_cast<size_t>(n)), q_im(static_cast<size_t>(n)), err(static_cast<size_t>(n));
  std::vector<double> mag(static_cast<size_t>(n));
  std::vector<double> xs, rhs;
  std::vector<std::uint8_t> keep;
  std::vector<std::pair<long, long>> windows;

  std::vector<long> y(static_cast<size_t>(m), -A);
  do {
    cd Yc = 0;
    for (int t = 0; t < m; ++t) Yc += static_cast<double>(y[static_cast<size_t>(t)]) * w[static_cast<size_t>(t)];
    const double house_y = k > 0 ? house(static_cast<double>(y[0]), std::vector<long>(y.begin() + 1, y.end())) : 0;
    const Coords y_coords = to_coords(y);

    std::vector<long> xr(static_cast<size_t>(m - 1), -A);
    do {
      cd Xrest = 0;
      for (int t = 1; t < m; ++t) Xrest += static_cast<double>(xr[static_cast<size_t>(t - 1)]) * w[static_cast<size_t>(t)];
      windows.clear();
      for (int j = 0; j < n; ++j) {
        const size_t uj = static_cast<size_t>(j);
        cd q = Xrest - alpha[uj] * Yc + lambda[uj];
        q_re[uj] = q.real();
        q_im[uj] = q.imag();
        mag[uj] = std::abs(Xrest) + std::abs(alpha[uj]) * std::abs(Yc) + std::abs(lambda[uj]);
        err[uj] = kFilterRelErr * (1 + mag[uj]);
        const double delta = 1e-9 * (1 + mag[uj] + static_cast<double>(A));
        const double im_low = std::max(0.0, std::fabs(q.imag()) - delta);
        if (im_low > r) continue;
        const double half = std::sqrt(std::max(0.0, r * r - im_low * im_low)) + delta;
        const double centre = -q.real();
        long lo = static_cast<long>(std::max(std::ceil(centre - half), -static_cast<double>(A)));
        long hi = static_cast<long>(std::min(std::floor(centre + half), static_cast<double>(A)));
        if (lo <= hi) windows.emplace_back(lo, hi);
      }
      if (windows.empty()) continue;
      std::sort(windows.begin(), windows.end());
      xs.clear();
      rhs.clear();
      long next = windows.front().first;
      for (const auto& [lo, hi] : windows) {
        for (long x1 = std::max(lo, next); x1 <= hi; ++x1) {
          xs.push_back(static_cast<double>(x1));
          double bound = c0_up;
          if (k > 0) {
            double Z = std::max(house_y, house(static_cast<double>(x1), xr));
            bound *= std::pow(Z, k) * (1 + kSlack);
          }
          rhs.push_back(bound);
        }
        next = std::max(next, hi + 1);
      }
      keep.assign(xs.size(), 0);
      FilterBatch batch;
      batch.n = n;
      batch.q_re = q_re.data();
      batch.q_im = q_im.data();
      batch.err = err.data();
      batch.count = xs.size();
      batch.x1 = xs.data();
      batch.rhs = rhs.data();
      batch.keep = keep.data();
      run_filter(batch, opt.simd);
      out.candidates_filtered += xs.size();

      for (size_t c = 0; c < xs.size(); ++c) {
        if (!keep[c]) continue;
        ++out.candidates_verified;
        CandidateSolution cand = verify(to_coords(static_cast<long>(xs[c]), xr), y_coords);
        if (cand.verdict == Verdict::Solution) {
          out.solutions.push_back(std::move(cand));
        } else if (cand.verdict == Verdict::Borderline) {
          out.borderline.push_back(std::move(cand));
        }
      }
    } while (advance(xr, A));
  } while (advance(y, A));

  std::sort(out.solutions.begin(), out.solutions.end(), canonical_less);
  std::sort(out.borderline.begin(), out.borderline.end(), canonical_less);
  return out;
}

SolutionSet brute_force(const ProblemInstance& inst, long box, double budget) {
  if (box < 0) throw InvalidInput("oracle box must be nonnegative");
  const int m = inst.m();
  const double work = std::pow(2.0 * static_cast<double>(box) + 1, 2 * m);
  if (work > budget) throw BudgetExceeded(work, budget);
  SolutionSet out;
  out.enumeration_bound = box;
  const Verifier verify(inst);
  std::vector<long> v(static_cast<size_t>(2 * m), -box);
  do {
    ++out.candidates_verified;
    CandidateSolution c = verify(to_coords(std::vector<long>(v.begin(), v.begin() + m)),
                                 to_coords(std::vector<long>(v.begin() + m, v.end())));
    if (c.verdict == Verdict::Solution) {
      out.solutions.push_back(std::move(c));
    } else if (c.verdict == Verdict::Borderline) {
      out.borderline.push_back(std::move(c));
    }
  } while (advance(v, box));
  out.candidates_filtered = out.candidates_verified;
  std::sort(out.solutions.begin(), out.solutions.end(), canonical_less);
  std::sort(out.borderline.begin(), out.borderline.end(), canonical_less);
  return out;
}

}  // namespace relthue::enumeration
