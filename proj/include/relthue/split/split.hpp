#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "relthue/solver.hpp"

namespace relthue::split {

/// A totally real inequality over Z[w], M = Q(i sqrt d), written as two
/// inequalities over Z:
///   d = 1, 2 mod 4:  |prod (x1 - a_j y1 + l_j1)|          <= c0
///                    |prod (x2 - a_j y2 + l_j2 / sqrt d)| <= c0 / sqrt(d)^n
///   d = 3 mod 4:     |prod (u - a_j v + 2 l_j1)|           <= 2^n c0,  u = 2x1 + x2, v = 2y1 + y2
///                    |prod (x2 - a_j y2 + 2 l_j2 / sqrt d)| <= 2^n c0 / sqrt(d)^n
/// where lambda_j = l_j1 + i l_j2.
struct SplitProblem {
  long d = 0;
  bool three_mod_four = false;
  /// Variables (x1, y1), or (u, v) when d = 3 mod 4.
  std::optional<ProblemInstance> real_part;
  /// Variables (x2, y2).
  std::optional<ProblemInstance> imag_part;
  /// (l_j1, l_j2) per factor.
  std::vector<std::pair<Ball, Ball>> lambda_decomp;
};

/// Throws UnsupportedRHS for k != 0, NotTotallyReal unless M is imaginary
/// quadratic and every alpha_j is certified real, DegenerateAlpha if some
/// alpha_j may be zero.
SplitProblem split(const ProblemInstance& inst);

/// All pairs of sub-solutions mapped back to (X, Y) and verified against the
/// original inequality (including Z <= Z0).
enumeration::SolutionSet recombine(const SplitProblem& sp, const enumeration::SolutionSet& re,
                                   const enumeration::SolutionSet& im, const ProblemInstance& original);

/// Coordinates (x1, x2) of X from the sub-solution values; nullopt when the
/// parity condition of the d = 3 mod 4 case fails.
std::optional<Coords> lift(const SplitProblem& sp, const mpz_class& real_value, const mpz_class& imag_value);

struct SplitReport {
  SplitProblem problem;
  SolveReport real_report, imag_report;
  std::optional<enumeration::SolutionSet> solutions;
};

SplitReport solve_split(const ProblemInstance& inst, const SolveOptions& opt = {});

}  // namespace relthue::split
