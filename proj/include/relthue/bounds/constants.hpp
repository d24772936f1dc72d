#pragma once

#include <vector>

#include "relthue/bounds/instance.hpp"

namespace relthue {

/// Constants of the smallness lemmas, one row per minimal index i.
/// c1 holds lower bounds (it only appears in denominators); every other
/// entry is an upper bound. Diagonal entries of the matrices are unused.
struct ConstantsTable {
  int n = 0;
  int m = 1;
  int k = 0;
  std::vector<double> eps;
  std::vector<std::vector<Real>> c1, c2, c3;
  std::vector<Real> c4, c5;
  /// Coordinate threshold: A >= c8 forces Z >= c4 (c8 = c4 * c7).
  std::vector<Real> c8;
  /// |beta_i| <= c9 * A^(k+1-n) once A >= c8 (c9 = c5 * c7^(n-1-k)).
  std::vector<Real> c9;
  /// max(c8, 2 c_lambda): below this, solutions are enumerated directly.
  std::vector<Real> tiny_threshold;
  Real c6{64}, c7{64}, c_lambda{64};
  mpz_class A0;

  const Real& max_tiny_threshold() const;
};

/// Default epsilon is 0.5 for every index. With `optimize_eps` each eps_i is
/// picked from {0.1, ..., 0.9} to minimise c4_i.
ConstantsTable compute_constants(const ProblemInstance& inst, const std::vector<double>& eps = {},
                                 bool optimize_eps = false);

/// c9_i * A^(k+1-n), an upper bound for the smallest linear form of any
/// solution with minimal index i and coordinate bound A >= tiny_threshold_i.
Real small_factor_bound(int i, const mpz_class& A, const ConstantsTable& tbl);

}  // namespace relthue
