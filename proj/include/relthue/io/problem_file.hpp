#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relthue/resultant/resultant.hpp"

namespace relthue::io {

enum class Mode { Direct, Split, Resultant };

Mode parse_mode(const std::string& s);
std::string to_string(Mode m);

struct ProblemOptions {
  /// One value for every index, or one per index.
  std::vector<double> epsilons;
  bool optimize_eps = false;
  std::optional<double> enumeration_budget;
  /// Power-of-ten increases of H tried per step.
  std::optional<int> H_cap;
  std::optional<int> precision_floor;
};

/// A parsed problem. Exactly one payload is present: alpha_poly (with an
/// optional lambda_poly, default 0) and c0, or the resultant pair f, c.
struct ProblemFile {
  std::string name;
  Mode mode = Mode::Direct;
  FieldPtr field;
  std::optional<FieldPoly> alpha_poly, lambda_poly;
  std::optional<FieldPoly> f;
  mpq_class c0 = 1;
  mpq_class c = 1;
  int k = 0;
  mpq_class Z0 = 1;
  ProblemOptions options;

  bool is_resultant() const { return f.has_value(); }
};

/// YAML text. Errors are InvalidInput naming the line and the field.
ProblemFile parse_problem(const std::string& text, const std::string& name = "<input>");
ProblemFile load_problem(const std::string& path);

/// The Thue instance of the file (for a resultant payload, lambda = alpha^2).
ProblemInstance build_instance(const ProblemFile& p);
resultant::ResultantProblem build_resultant(const ProblemFile& p);

}  // namespace relthue::io
