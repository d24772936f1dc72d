#pragma once

#include <gmpxx.h>

#include <vector>

#include "relthue/bounds/constants.hpp"
#include "relthue/lattice/lll.hpp"

namespace relthue::lattice {

/// The lattice of the reduction step. Basis vector c (c = 0..2m) holds the
/// identity block scaled by `scale` and the magnified rows
/// round(scale * H * Re/Im(v_c)), where v = (w_1..w_m, alpha_i w_1..alpha_i w_m,
/// lambda_i). A solution maps to the combination (x_1..x_m, -y_1..-y_m, 1).
struct ScaledLattice {
  IntMatrix basis;
  mpz_class scale;
  mpz_class H;
  int digits = 0;
  int magnified_rows = 0;
  /// Bound for the rounding error of one magnified coordinate of a solution
  /// vector with coordinates <= A0, in unscaled units.
  Real rounding_slack{64};
};

/// Scale of the identity block. Keeps the integer rounding of the magnified
/// rows negligible next to the coordinates.
inline constexpr long kIdentityScale = 4096;

/// LLL parameter of the reduction. The gate uses the matching guarantee
/// ||b1||^2 <= (1/(delta - 1/4))^(dim-1) ||v||^2, here (50/37)^(dim-1).
inline const mpq_class kReductionDelta{99, 100};

/// Throws PrecisionExhausted if an entry's enclosure is wider than 1/2.
ScaledLattice build_lattice(const ProblemInstance& inst, int i, const mpz_class& H, int digits, const mpz_class& A0);

struct ReductionStep {
  int step_no = 0;
  mpz_class A0_in;
  mpz_class H;
  int digits = 0;
  Real b1_norm{64};
  Real b1_required{64};
  mpz_class A_new;
  /// ||b1|| cleared the (exact) threshold.
  bool gate_passed = false;
  /// gate_passed and A_new < A0_in.
  bool accepted = false;
  int lll_runs = 0;
};

struct ReductionTrace {
  int i = 0;
  std::vector<ReductionStep> steps;
  mpz_class final_bound;
};

struct ReductionOptions {
  int digits_floor = 50;
  /// Power-of-ten increases of H tried before giving up on a step.
  int max_h_increases = 16;
  /// Power-of-ten decreases tried when the first H already passes.
  int max_h_decreases = 6;
  /// Stop when A_new >= stop_ratio * previous bound.
  double stop_ratio = 0.99;
  int max_steps = 200;
  /// After the power-of-ten search, try H = c * 10^(e-1), c = 2..9.
  bool refine_mantissa = true;
};

/// Digits used for a given H: enough that scale*H*radius stays below 1/2.
int digits_for(const mpz_class& H, int floor_digits);

/// One application of the reduction theorem with a fixed H.
ReductionStep reduction_step(const ProblemInstance& inst, const ConstantsTable& tbl, int i, const mpz_class& A0_in,
                             const mpz_class& H, int digits);

/// Iterated reduction for minimal index i starting from A0.
ReductionTrace reduce_loop(const ProblemInstance& inst, const ConstantsTable& tbl, int i, const mpz_class& A0,
                           const ReductionOptions& opt = {});

}  // namespace relthue::lattice
