#include "relthue/io/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "relthue/errors.hpp"
#include "relthue/io/format.hpp"

namespace relthue::io {

namespace {

using enumeration::CandidateSolution;
using enumeration::SolutionSet;
using nlohmann::json;

json coords_json(const Coords& c) {
  json a = json::array();
  for (const auto& v : c) {
    if (v.fits_slong_p()) {
      a.push_back(v.get_si());
    } else {
      a.push_back(v.get_str());
    }
  }
  return a;
}

Coords coords_from(const json& a) {
  Coords c;
  for (const auto& v : a) c.emplace_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>()));
  return c;
}

SolveOptions solve_options(const ProblemFile& p, const RunFlags& f) {
  SolveOptions o;
  o.eps = p.options.epsilons;
  o.optimize_eps = p.options.optimize_eps;
  if (f.epsilon) {
    o.eps = {*f.epsilon};
    o.optimize_eps = false;
  }
  if (p.options.enumeration_budget) o.enumeration.budget = *p.options.enumeration_budget;
  if (f.budget) o.enumeration.budget = *f.budget;
  if (p.options.H_cap) o.reduction.max_h_increases = *p.options.H_cap;
  if (p.options.precision_floor) o.reduction.digits_floor = *p.options.precision_floor;
  if (f.digits_floor) o.reduction.digits_floor = *f.digits_floor;
  o.trace_only = f.trace_only;
  return o;
}

class Writer {
 public:
  std::ostringstream text;
  std::ostringstream records;

  void record(const json& j) { records << j.dump() << '\n'; }

  void solve_report(const std::string& label, const ProblemInstance& inst, const SolveReport& rep) {
    const ConstantsTable& t = rep.constants;
    text << "== " << label << ": " << inst.describe() << "\n";
    text << "A0 = " << format_integer(t.A0) << ", c7 = " << t.c7.to_string(6)
         << ", tiny threshold = " << t.max_tiny_threshold().to_string(6) << "\n";
    for (const auto& tr : rep.traces) {
      if (tr.steps.empty()) continue;
      text << "\ni = " << tr.i + 1 << "  (final bound " << format_integer(tr.final_bound) << ")\n";
      text << render_table(tr);
      for (const auto& s : tr.steps) {
        record({{"record", "step"}, {"instance", label}, {"i", tr.i + 1}, {"step", s.step_no},
                {"A0", s.A0_in.get_str()}, {"b1_required", s.b1_required.to_string(10)}, {"H", s.H.get_str()},
                {"digits", s.digits}, {"A_new", s.A_new.get_str()}});
      }
    }
    if (rep.direct_enumeration) text << "\nno reduction possible (n <= 2m+k+1)\n";
    text << "\nenumeration bound A_R = " << rep.enumeration_bound.get_str() << "\n";
    for (const auto& n : rep.notes) text << "note: " << n << "\n";
    record({{"record", "bound"}, {"instance", label}, {"enumeration_bound", rep.enumeration_bound.get_str()},
            {"direct_enumeration", rep.direct_enumeration}});
    if (rep.solutions) solution_list(label, inst.field(), *rep.solutions);
    text << "\n";
  }

  void solution_list(const std::string& label, const GroundField& M, const SolutionSet& s) {
    text << s.size() << " solution(s) for " << label << "\n";
    for (const auto& c : s.solutions) {
      text << "  X = " << M.element_to_string(c.x) << ", Y = " << M.element_to_string(c.y) << "\n";
      record(candidate(label, c, "solution"));
    }
    if (!s.borderline.empty()) {
      text << "BORDERLINE (undecided, not counted): " << s.borderline.size() << "\n";
      for (const auto& c : s.borderline) {
        text << "  X = " << M.element_to_string(c.x) << ", Y = " << M.element_to_string(c.y) << "\n";
        record(candidate(label, c, "borderline"));
      }
    }
  }

  static json candidate(const std::string& label, const CandidateSolution& c, const char* kind) {
    return {{"record", kind},
            {"instance", label},
            {"x", coords_json(c.x)},
            {"y", coords_json(c.y)},
            {"value", c.exact_value.empty() ? c.product_abs.to_string(12) : c.exact_value},
            {"Z", c.Z.to_string(12)}};
  }
};

void collect(RunOutcome& out, const SolutionSet& s) {
  for (const auto& c : s.solutions) out.solutions.emplace_back(c.x, c.y);
  if (!s.borderline.empty()) out.exit_code = 2;
}

}  // namespace

RunOutcome run(const ProblemFile& problem, const RunFlags& flags) {
  const auto start = std::chrono::steady_clock::now();
  ProblemFile p = problem;
  if (flags.mode) p.mode = *flags.mode;
  if (flags.z0) p.Z0 = *flags.z0;
  if (p.mode == Mode::Resultant && !p.is_resultant()) throw InvalidInput(p.name + ": resultant mode needs f and c");
  const SolveOptions opt = solve_options(p, flags);

  RunOutcome out;
  Writer w;
  w.record({{"record", "problem"}, {"name", p.name}, {"mode", to_string(p.mode)}, {"field", p.field->describe()},
            {"Z0", p.Z0.get_str()}});

  if (flags.oracle) {
    ProblemInstance inst = build_instance(p);
    SolutionSet s = enumeration::brute_force(inst, flags.oracle_box, opt.enumeration.budget);
    w.text << "== oracle: every pair with coordinates <= " << flags.oracle_box << "\n";
    w.solution_list("final", inst.field(), s);
    collect(out, s);
  } else if (p.mode == Mode::Resultant) {
    auto rp = build_resultant(p);
    auto rep = resultant::solve_resultant(rp, p.Z0, opt);
    if (rep.split_report) {
      const auto& sr = *rep.split_report;
      w.solve_report("real", *sr.problem.real_part, sr.real_report);
      w.solve_report("imag", *sr.problem.imag_part, sr.imag_report);
    } else if (rep.direct_report) {
      w.solve_report("main", resultant::to_thue_instance(rp, p.Z0), *rep.direct_report);
    }
    if (!opt.trace_only) {
      w.text << rep.factors.size() << " quadratic factor(s) g with |Res(f, g)| <= " << p.c.get_str() << "\n";
      for (const auto& g : rep.factors) {
        w.text << "  " << g.to_string(*p.field) << "\n";
        w.record({{"record", "solution"}, {"instance", "final"}, {"x", coords_json(g.X)}, {"y", coords_json(g.Y)},
                  {"g", g.to_string(*p.field)}, {"resultant", coords_json(g.resultant)}});
        out.solutions.emplace_back(g.X, g.Y);
      }
      for (const auto& c : rep.borderline) w.record(Writer::candidate("final", c, "borderline"));
      if (!rep.borderline.empty()) {
        w.text << "BORDERLINE (undecided, not counted): " << rep.borderline.size() << "\n";
        out.exit_code = 2;
      }
    }
    for (const auto& n : rep.notes) w.text << "note: " << n << "\n";
  } else if (p.mode == Mode::Split) {
    ProblemInstance inst = build_instance(p);
    auto rep = split::solve_split(inst, opt);
    w.solve_report("real", *rep.problem.real_part, rep.real_report);
    w.solve_report("imag", *rep.problem.imag_part, rep.imag_report);
    if (rep.solutions) {
      w.text << "== recombined\n";
      w.solution_list("final", inst.field(), *rep.solutions);
      collect(out, *rep.solutions);
    }
  } else {
    ProblemInstance inst = build_instance(p);
    SolveReport rep = solve(inst, opt);
    w.solve_report("final", inst, rep);
    if (rep.solutions) collect(out, *rep.solutions);
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::sort(out.solutions.begin(), out.solutions.end());
  w.record({{"record", "summary"}, {"solutions", out.solutions.size()}, {"exit_code", out.exit_code},
            {"seconds", secs}});
  w.text << "time: " << secs << " s\n";
  out.text = w.text.str();
  out.records = w.records.str();
  return out;
}

std::vector<std::pair<Coords, Coords>> parse_solution_records(const std::string& records) {
  std::vector<std::pair<Coords, Coords>> out;
  std::istringstream in(records);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (j.value("record", "") == "solution" && j.value("instance", "") == "final") {
      out.emplace_back(coords_from(j["x"]), coords_from(j["y"]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace relthue::io
