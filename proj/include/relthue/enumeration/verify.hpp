#pragma once

#include <optional>
#include <string>

#include "relthue/bounds/instance.hpp"

namespace relthue::enumeration {

enum class Verdict { Solution, NotSolution, Borderline };

struct CandidateSolution {
  Coords x, y;
  /// Enclosure of |prod_j (X - alpha_j Y + lambda_j)|.
  Ball product_abs{64};
  /// Enclosure of Z = max(size X, size Y).
  Ball Z{64};
  /// Exact value of the product when it was computed, as text.
  std::string exact_value;
  bool verified = false;
  Verdict verdict = Verdict::Borderline;
};

/// prod_j (X - alpha_j Y + lambda_j) at `digits` digits.
CBall product_enclosure(const ProblemInstance& inst, const Coords& x, const Coords& y, int digits);
/// max(size X, size Y) at `prec` bits.
Ball size_enclosure(const GroundField& field, const Coords& x, const Coords& y, Precision prec);

/// Exact value of the product, available when alpha_j are the roots of a
/// monic f over Z or a quadratic ring. Returned as coordinates.
std::optional<Coords> exact_product(const ProblemInstance& inst, const Coords& x, const Coords& y);

/// Exact decision of max(size X, size Y) <= Z0 for Q and quadratic fields;
/// nullopt for explicit fields.
std::optional<bool> size_within(const GroundField& field, const Coords& x, const Coords& y, const mpq_class& Z0);

/// Decides |prod| <= c0 Z^k: interval arithmetic first, then the exact
/// product, then intervals at increasing precision. Borderline only if all
/// three fail.
CandidateSolution verify_exact(const ProblemInstance& inst, const Coords& x, const Coords& y);

/// verify_exact with the first-stage conjugates computed once, for use on
/// many candidates of one instance.
class Verifier {
 public:
  explicit Verifier(const ProblemInstance& inst);
  CandidateSolution operator()(const Coords& x, const Coords& y) const;

 private:
  const ProblemInstance& inst_;
  Precision prec_;
  std::vector<CBall> alphas_, lambdas_;
};

}  // namespace relthue::enumeration
