#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relthue/split/split.hpp"

namespace relthue::resultant {

/// Monic quadratic g(t) = t^2 - Y t + X over Z_M with |Res_M(f, g)| <= c.
struct ResultantProblem {
  FieldPoly f;
  mpq_class c = 1;
};

struct QuadraticFactor {
  Coords X, Y;
  /// Res_M(f, g), exactly, as coordinates.
  Coords resultant;

  std::string to_string(const GroundField& M) const;
};

/// alpha_j = roots of f, lambda_j = alpha_j^2, c0 = c, k = 0.
/// Throws NotSquarefree, InvalidInput for a non-monic f or n < 3.
ProblemInstance to_thue_instance(const ResultantProblem& rp, const mpq_class& Z0);

/// Res_M(f, t^2 - Y t + X) = r1^2 X + r0 r1 Y + r0^2, r1 t + r0 = f mod g.
/// Exact for Q and quadratic fields.
Coords exact_resultant(const FieldPoly& f, const Coords& X, const Coords& Y);

/// |Res| <= c decided exactly.
bool resultant_within(const GroundField& M, const Coords& res, const mpq_class& c);

struct ResultantReport {
  std::vector<QuadraticFactor> factors;
  std::vector<enumeration::CandidateSolution> borderline;
  bool via_split = false;
  std::optional<split::SplitReport> split_report;
  std::optional<SolveReport> direct_report;
  std::vector<std::string> notes;
};

/// Routes through the split when M is imaginary quadratic and f has real
/// roots and rational coefficients; otherwise through the direct pipeline.
ResultantReport solve_resultant(const ResultantProblem& rp, const mpq_class& Z0, const SolveOptions& opt = {});

}  // namespace relthue::resultant
