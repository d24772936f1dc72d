// relthue: solve inhomogeneous relative Thue inequalities from a problem file.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "relthue/errors.hpp"
#include "relthue/io/format.hpp"
#include "relthue/io/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Solver for |prod (X - alpha_j Y + lambda_j)| <= c0 Z^k over the integers of a number field"};
  std::string path, mode, z0, records_path;
  double epsilon = 0, budget = 0;
  int digits_floor = 0;
  relthue::io::RunFlags flags;
  bool records_only = false;

  app.add_option("problem", path, "Problem file (YAML)")->required()->check(CLI::ExistingFile);
  app.add_option("--mode", mode, "Override the mode: direct, split or resultant");
  app.add_option("--z0", z0, "Override Z0 (exact: 10^100, 1e100, ...)");
  auto* eps_opt = app.add_option("--epsilon", epsilon, "Use this epsilon for every index")->check(CLI::Range(0.0, 1.0));
  auto* budget_opt = app.add_option("--budget", budget, "Enumeration budget (candidate evaluations)");
  auto* digits_opt = app.add_option("--digits-floor", digits_floor, "Minimum decimal digits for the lattice");
  app.add_flag("--trace-only", flags.trace_only, "Run the reductions only, no enumeration");
  app.add_flag("--oracle", flags.oracle, "Brute-force the coordinate box instead of running the pipeline");
  app.add_option("--oracle-box", flags.oracle_box, "Coordinate box for --oracle")->check(CLI::NonNegativeNumber);
  app.add_option("--records", records_path, "Write JSON line records to this file ('-' for stdout)");
  app.add_flag("--records-only", records_only, "Print only the JSON line records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (!mode.empty()) flags.mode = relthue::io::parse_mode(mode);
    if (!z0.empty()) flags.z0 = relthue::io::parse_exact(z0);
    if (*eps_opt) flags.epsilon = epsilon;
    if (*budget_opt) flags.budget = budget;
    if (*digits_opt) flags.digits_floor = digits_floor;

    auto problem = relthue::io::load_problem(path);
    auto out = relthue::io::run(problem, flags);
    if (records_only) {
      std::cout << out.records;
    } else {
      std::cout << out.text;
    }
    if (records_path == "-" && !records_only) {
      std::cout << out.records;
    } else if (!records_path.empty() && records_path != "-") {
      std::ofstream f(records_path);
      if (!f) throw relthue::InvalidInput("cannot write '" + records_path + "'");
      f << out.records;
    }
    return out.exit_code;
  } catch (const relthue::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n  rerun with --budget " << e.required() << " to proceed\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
