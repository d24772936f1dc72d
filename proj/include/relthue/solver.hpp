#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relthue/bounds/constants.hpp"
#include "relthue/enumeration/enumerate.hpp"
#include "relthue/lattice/reduction.hpp"

namespace relthue {

struct SolveOptions {
  /// Per-index epsilon; empty means 0.5 everywhere.
  std::vector<double> eps;
  bool optimize_eps = false;
  lattice::ReductionOptions reduction;
  enumeration::EnumerationOptions enumeration;
  /// Run the reductions only; no enumeration.
  bool trace_only = false;
};

struct SolveReport {
  ConstantsTable constants;
  /// One trace per minimal index i (empty when the instance is not reducible).
  std::vector<lattice::ReductionTrace> traces;
  mpz_class enumeration_bound;
  /// The reduction could not run (n <= 2m+k+1) and the A0 box was enumerated.
  bool direct_enumeration = false;
  std::optional<enumeration::SolutionSet> solutions;
  double seconds = 0;
  std::vector<std::string> notes;
};

/// Constants, iterated reduction for every index, then tiny enumeration.
SolveReport solve(const ProblemInstance& inst, const SolveOptions& opt = {});

}  // namespace relthue
