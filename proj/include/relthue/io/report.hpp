#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relthue/io/problem_file.hpp"

namespace relthue::io {

/// Command-line overrides of the problem file.
struct RunFlags {
  std::optional<Mode> mode;
  std::optional<mpq_class> z0;
  std::optional<double> epsilon;
  std::optional<double> budget;
  std::optional<int> digits_floor;
  bool trace_only = false;
  /// Brute-force the coordinate box |x_j|, |y_j| <= oracle_box instead.
  bool oracle = false;
  long oracle_box = 10;
};

struct RunOutcome {
  /// 0: every candidate decided; 2: borderline candidates remain.
  int exit_code = 0;
  /// Human-readable report with the reduction tables.
  std::string text;
  /// One JSON object per line.
  std::string records;
  /// Final answer as (x, y) coordinate pairs, sorted.
  std::vector<std::pair<Coords, Coords>> solutions;
};

/// Runs the pipeline selected by the file and flags. Library errors propagate.
RunOutcome run(const ProblemFile& problem, const RunFlags& flags = {});

/// The final-answer (x, y) pairs from a records stream written by run().
std::vector<std::pair<Coords, Coords>> parse_solution_records(const std::string& records);

}  // namespace relthue::io
