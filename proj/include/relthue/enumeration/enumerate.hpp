#pragma once

#include <cstdint>
#include <vector>

#include "relthue/enumeration/filter.hpp"
#include "relthue/enumeration/verify.hpp"

namespace relthue::enumeration {

struct SolutionSet {
  /// Verified solutions, sorted lexicographically by (x, y).
  std::vector<CandidateSolution> solutions;
  /// Candidates whose verdict could not be certified (never counted).
  std::vector<CandidateSolution> borderline;
  mpz_class enumeration_bound;
  std::uint64_t candidates_filtered = 0;
  std::uint64_t candidates_verified = 0;

  size_t size() const { return solutions.size(); }
  bool contains(const Coords& x, const Coords& y) const;
};

struct EnumerationOptions {
  double budget = 1e9;
  SimdLevel simd = detect_simd();
};

/// Estimated number of filter evaluations for the box |x_j|, |y_j| <= A_R.
double enumeration_work(const ProblemInstance& inst, const mpz_class& A_R);

/// All solutions with every coordinate at most A_R in absolute value.
/// Throws BudgetExceeded when the estimated work exceeds the budget.
SolutionSet enumerate_tiny(const ProblemInstance& inst, const mpz_class& A_R, const EnumerationOptions& opt = {});

/// Every pair in the box passed to the certified check, with no filtering.
/// Slow; meant for cross-checking the pipeline at small scale.
SolutionSet brute_force(const ProblemInstance& inst, long box, double budget = 1e7);

/// Lexicographic order on (x, y).
bool canonical_less(const CandidateSolution& a, const CandidateSolution& b);

}  // namespace relthue::enumeration
