// End-to-end acceptance run. Prints one PASS/FAIL line per criterion.
//
//   acceptance [--only 2,4] [--expected-failures 1] [--seed N]
//
// Exit status is 0 when the set of failing criteria equals the expected set.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "miniature.hpp"
#include "oracle.hpp"
#include "relthue/errors.hpp"
#include "relthue/field/exact.hpp"
#include "relthue/io/format.hpp"
#include "relthue/io/problem_file.hpp"
#include "relthue/resultant/resultant.hpp"

using namespace relthue;
using enumeration::SolutionSet;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fixture(const char* name) { return std::string(RELTHUE_SOURCE_DIR) + "/fixtures/" + name; }

long max_coord(const SolutionSet& s) {
  long m = 0;
  for (const auto& c : s.solutions) {
    for (const auto& v : c.x) m = std::max(m, std::abs(v.get_si()));
    for (const auto& v : c.y) m = std::max(m, std::abs(v.get_si()));
  }
  return m;
}

long max_coord(const std::vector<oracle::Pair>& s) {
  long m = 0;
  for (const auto& p : s) {
    for (long v : {p.x[0], p.x[1], p.y[0], p.y[1]}) m = std::max(m, std::abs(v));
  }
  return m;
}

std::vector<oracle::Pair> within(const oracle::Problem& p, const std::vector<oracle::Pair>& s, double Z0) {
  std::vector<oracle::Pair> out;
  for (const auto& q : s) {
    if (oracle::size(p, q) <= Z0 * (1 + 1e-12)) out.push_back(q);
  }
  return out;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// Lemma property: for a solution with minimal index i and Z >= c4_i,
//   |beta_i| <= c5_i Z^(k+1-n)  and  |beta_j| >= c1_ij Z / 2  (j != i).

struct LemmaTally {
  long solutions = 0;
  long checked = 0;
  long violations = 0;
  std::string first_violation;
};

void lemma_check(const oracle::Problem& p, const ProblemInstance& inst, const ConstantsTable& t,
                 const std::vector<oracle::Pair>& sols, LemmaTally& tally) {
  const std::vector<oracle::cld> alpha = oracle::roots(p.f);
  const oracle::cld w = oracle::omega(p.D);
  std::vector<oracle::cld> lambda;
  for (const auto& a : alpha) {
    oracle::cld v = 0;
    for (size_t i = p.h.size(); i-- > 0;) {
      v = v * a + (static_cast<long double>(p.h[i][0]) + static_cast<long double>(p.h[i][1]) * w);
    }
    lambda.push_back(v);
  }
  // Oracle root j <-> library index.
  const auto lib = inst.alphas(30);
  std::vector<size_t> index(alpha.size());
  for (size_t j = 0; j < alpha.size(); ++j) {
    long double best = INFINITY;
    for (size_t l = 0; l < lib.size(); ++l) {
      oracle::cld z(lib[l].re().to_double(), lib[l].im().to_double());
      long double d = std::abs(z - alpha[j]);
      if (d < best) {
        best = d;
        index[j] = l;
      }
    }
  }
  const int n = p.n();
  for (const auto& s : sols) {
    ++tally.solutions;
    const long double Z = oracle::size(p, s);
    oracle::cld X = static_cast<long double>(s.x[0]) + static_cast<long double>(s.x[1]) * w;
    oracle::cld Y = static_cast<long double>(s.y[0]) + static_cast<long double>(s.y[1]) * w;
    std::vector<long double> beta(alpha.size());
    size_t jmin = 0;
    for (size_t j = 0; j < alpha.size(); ++j) {
      beta[j] = std::abs(X - alpha[j] * Y + lambda[j]);
      if (beta[j] < beta[jmin]) jmin = j;
    }
    const size_t i = index[jmin];
    if (Z < t.c4[i].to_double()) continue;
    ++tally.checked;
    bool ok = beta[jmin] <= t.c5[i].to_double() * std::pow(Z, static_cast<long double>(p.k + 1 - n)) * (1 + 1e-9L);
    for (size_t j = 0; j < alpha.size(); ++j) {
      if (j == jmin) continue;
      ok = ok && beta[j] >= t.c1[i][index[j]].to_double() / 2 * Z * (1 - 1e-9L);
    }
    if (!ok) {
      ++tally.violations;
      if (tally.first_violation.empty()) {
        tally.first_violation = miniature::describe(p) + " at x=(" + std::to_string(s.x[0]) + "," +
                                std::to_string(s.x[1]) + ") y=(" + std::to_string(s.y[0]) + "," +
                                std::to_string(s.y[1]) + ")";
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Criteria 1 and 3 share the run on fixture 1.

struct Fixture1 {
  bool ran = false;
  std::string error;
  SolveReport report;
  double seconds = 0;
  ProblemInstance* inst = nullptr;
};

Fixture1& fixture1() {
  static Fixture1 f;
  static std::optional<ProblemInstance> inst;
  if (f.ran) return f;
  f.ran = true;
  try {
    inst.emplace(io::build_instance(io::load_problem(fixture("sec51.yaml"))));
    f.inst = &*inst;
    SolveOptions opt;
    opt.enumeration.budget = 1e12;
    const auto t0 = std::chrono::steady_clock::now();
    f.report = solve(*inst, opt);
    f.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } catch (const std::exception& e) {
    f.error = e.what();
  }
  return f;
}

oracle::Problem fixture1_problem() {
  oracle::Problem p;
  p.D = 2;
  p.f = {-1, 5, 3, -20, -2, 24, 0, -9, 0, 1};
  p.h = {{0, 0}, {2, 0}, {1, 0}};
  p.c0_squared = 100;
  return p;
}

// Fixture 1 is over Q(sqrt 2): X = x1 + x2 sqrt 2 with x1 ~ -x2 sqrt 2 is
// small in the first embedding however large x2 is. Looks for a certified
// solution of that shape with coordinates beyond `past`.
std::optional<enumeration::CandidateSolution> solution_beyond(const ProblemInstance& inst, long past) {
  enumeration::Verifier verify(inst);
  const long x2 = 4 * past + 16;
  for (long y2 = -x2; y2 <= x2; ++y2) {
    for (long t = -2; t <= 2; ++t) {
      for (long u = -2; u <= 2; ++u) {
        const long x1 = std::lround(-x2 * std::sqrt(2.0)) + t, y1 = std::lround(-y2 * std::sqrt(2.0)) + u;
        auto c = verify(Coords{mpz_class(x1), mpz_class(x2)}, Coords{mpz_class(y1), mpz_class(y2)});
        if (c.verdict == enumeration::Verdict::Solution) return c;
      }
    }
  }
  return std::nullopt;
}

Outcome criterion1() {
  Fixture1& f = fixture1();
  if (!f.error.empty()) return {false, "error: " + f.error};
  const SolveReport& r = f.report;
  const long count = static_cast<long>(r.solutions->size());
  const long mc = max_coord(*r.solutions);
  long small = 0;
  for (const auto& c : r.solutions->solutions) {
    bool in = true;
    for (const auto& v : c.x) in = in && abs(v) <= 4;
    for (const auto& v : c.y) in = in && abs(v) <= 4;
    small += in;
  }
  const bool bound_ok = r.enumeration_bound <= 150;
  const bool count_ok = count == 138;
  const bool coord_ok = mc <= 4;
  const bool time_ok = f.seconds <= 900;
  std::ostringstream os;
  os << "A_R = " << r.enumeration_bound.get_str() << (bound_ok ? " (<= 150)" : " (> 150)") << "; " << count
     << " verified solutions (required 138), " << small << " with every coordinate <= 4, max coordinate " << mc
     << "; borderline " << r.solutions->borderline.size() << "; " << fmt(f.seconds) << " s";
  if (auto c = solution_beyond(*f.inst, r.enumeration_bound.get_si())) {
    os << "; certified solution outside the reduced box: x=(" << c->x[0].get_str() << "," << c->x[1].get_str()
       << ") y=(" << c->y[0].get_str() << "," << c->y[1].get_str() << "), |prod| = " << c->product_abs.to_string(6);
  }
  return {bound_ok && count_ok && coord_ok && time_ok && r.solutions->borderline.empty(), os.str()};
}

Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  io::ProblemFile pf = io::load_problem(fixture("sec52.yaml"));
  resultant::ResultantReport rep = resultant::solve_resultant(io::build_resultant(pf), pf.Z0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!rep.split_report) return {false, "the problem did not go through the split"};
  const auto& sr = *rep.split_report;
  const long re_max = max_coord(*sr.real_report.solutions);
  const long im_max = max_coord(*sr.imag_report.solutions);
  bool exact_ok = true;
  for (const auto& q : rep.factors) {
    exact_ok = exact_ok && q.resultant == resultant::exact_resultant(pf.f.value(), q.X, q.Y) &&
               resultant::resultant_within(*pf.field, q.resultant, pf.c);
  }
  std::ostringstream os;
  os << rep.factors.size() << " quadratic factors (required 39); real part " << sr.real_report.solutions->size()
     << " solutions, max |x1|,|y1| = " << re_max << " (<= 4); imaginary part " << sr.imag_report.solutions->size()
     << " solutions, max |x2|,|y2| = " << im_max << " (<= 2); A_R = " << sr.real_report.enumeration_bound.get_str()
     << " / " << sr.imag_report.enumeration_bound.get_str() << "; borderline " << rep.borderline.size() << "; "
     << fmt(secs) << " s";
  const bool ok = rep.factors.size() == 39 && re_max <= 4 && im_max <= 2 && rep.borderline.empty() && exact_ok &&
                  secs <= 900;
  return {ok, os.str()};
}

Outcome criterion3() {
  Fixture1& f = fixture1();
  if (!f.error.empty()) return {false, "error: " + f.error};
  auto first_steps = [](const std::vector<lattice::ReductionTrace>& traces, mpz_class& lo, mpz_class& hi) {
    bool any = false;
    for (const auto& tr : traces) {
      if (tr.steps.empty()) continue;
      const mpz_class& a = tr.steps.front().A_new;
      if (!any || a < lo) lo = a;
      if (!any || a > hi) hi = a;
      any = true;
    }
    return any;
  };
  mpz_class e49, e50, e53;
  mpz_ui_pow_ui(e49.get_mpz_t(), 10, 49);
  mpz_ui_pow_ui(e50.get_mpz_t(), 10, 50);
  mpz_ui_pow_ui(e53.get_mpz_t(), 10, 53);
  mpz_class lo1, hi1, lo2, hi2;
  bool ok = first_steps(f.report.traces, lo1, hi1) && lo1 >= e49 && hi1 <= e53;

  io::ProblemFile pf = io::load_problem(fixture("sec52.yaml"));
  ProblemInstance inst = resultant::to_thue_instance(io::build_resultant(pf), pf.Z0);
  split::SplitProblem sp = split::split(inst);
  SolveOptions opt;
  opt.trace_only = true;
  SolveReport re = solve(*sp.real_part, opt);
  ok = first_steps(re.traces, lo2, hi2) && lo2 >= e50 && hi2 <= e53 && ok;
  std::ostringstream os;
  os << "fixture 1 first new bounds in [" << io::format_integer(lo1) << ", " << io::format_integer(hi1)
     << "] (need [10^49, 10^53]); fixture 2 (real part) in [" << io::format_integer(lo2) << ", "
     << io::format_integer(hi2) << "] (need [10^50, 10^53])";
  return {ok, os.str()};
}

// ---------------------------------------------------------------------------
// Criteria 4 and 5: random miniature instances.

struct Miniature {
  oracle::Problem p;
  std::optional<ProblemInstance> inst;
  mpz_class A_R;
  bool direct = false;
  std::vector<oracle::Pair> oracle_set, pipeline_set;
  long borderline = 0;
  long box = 0;
};

struct Plan {
  int count;
  miniature::Shape shape;
  std::vector<long> radicands;  // cycled through
  mpq_class Z0;
};

std::vector<Miniature>& miniatures(std::uint64_t seed, std::string& log) {
  static std::vector<Miniature> all;
  static bool built = false;
  if (built) return all;
  built = true;
  std::mt19937_64 rng(seed);
  auto shape = [](int n, int k) {
    miniature::Shape s;
    s.n = n;
    s.k = k;
    return s;
  };
  const mpq_class big("100000000000000000000");
  std::vector<Plan> plans = {
      {6, shape(4, 0), {0}, big}, {6, shape(5, 0), {0}, big}, {6, shape(6, 0), {0}, big},
      {4, shape(5, 1), {0}, big}, {4, shape(6, 1), {0}, big}, {6, shape(4, 1), {0}, 30},
      {16, shape(6, 0), {-1, -2, -3, -7}, big}, {6, shape(4, 0), {-1, -2, -3}, 6}, {6, shape(5, 1), {-1, -2, -3}, 5},
  };
  long regenerated = 0;
  for (const Plan& plan : plans) {
    for (int c = 0; c < plan.count; ++c) {
      for (int attempt = 0;; ++attempt) {
        miniature::Shape s = plan.shape;
        s.D = plan.radicands[static_cast<size_t>(c) % plan.radicands.size()];
        s.lambda_imag = s.D != 0 && c % 2 == 0;
        Miniature mi;
        mi.p = miniature::random_problem(rng, s);
        mi.inst.emplace(miniature::to_instance(mi.p, plan.Z0));
        SolveOptions opt;
        opt.enumeration.budget = 1e9;
        SolveReport rep;
        try {
          opt.trace_only = true;
          rep = solve(*mi.inst, opt);
          if (rep.enumeration_bound > 30) {
            ++regenerated;
            if (attempt > 200) throw std::runtime_error("no instance with A_R <= 30");
            continue;
          }
          opt.trace_only = false;
          rep = solve(*mi.inst, opt);
        } catch (const Error& e) {
          throw std::runtime_error(std::string(e.what()) + " for " + miniature::describe(mi.p));
        }
        mi.A_R = rep.enumeration_bound;
        mi.direct = rep.direct_enumeration;
        mi.pipeline_set = miniature::pairs(*rep.solutions);
        mi.borderline = static_cast<long>(rep.solutions->borderline.size());
        mi.box = std::max<long>(mi.A_R.get_si(), std::min<long>(30, mi.p.m() == 1 ? 30 : 12));
        mi.oracle_set = within(mi.p, oracle::brute_force(mi.p, mi.box), plan.Z0.get_d());
        all.push_back(std::move(mi));
        break;
      }
    }
  }
  log = std::to_string(regenerated) + " draws with A_R > 30 redrawn";
  return all;
}

Outcome criterion4(std::uint64_t seed) {
  std::string log;
  auto& all = miniatures(seed, log);
  long mismatches = 0, borderline = 0, solutions = 0, direct = 0;
  long m2 = 0, k1 = 0;
  std::string first;
  for (const auto& mi : all) {
    solutions += static_cast<long>(mi.oracle_set.size());
    borderline += mi.borderline;
    direct += mi.direct;
    m2 += mi.p.m() == 2;
    k1 += mi.p.k == 1;
    if (mi.pipeline_set != mi.oracle_set) {
      ++mismatches;
      if (first.empty()) {
        first = miniature::describe(mi.p) + " (pipeline " + std::to_string(mi.pipeline_set.size()) + ", oracle " +
                std::to_string(mi.oracle_set.size()) + ")";
      }
    }
  }
  std::ostringstream os;
  os << all.size() << " instances (" << m2 << " over imaginary quadratic fields, " << k1 << " with k = 1, " << direct
     << " without reduction), " << solutions << " oracle solutions; " << mismatches << " discrepancies, "
     << borderline << " borderline; " << log;
  if (!first.empty()) os << "; first: " << first;
  return {all.size() >= 50 && mismatches == 0 && borderline == 0, os.str()};
}

Outcome criterion5(std::uint64_t seed) {
  std::string log;
  auto& all = miniatures(seed, log);
  LemmaTally mini;
  for (const auto& mi : all) {
    ConstantsTable t = compute_constants(*mi.inst);
    lemma_check(mi.p, *mi.inst, t, mi.oracle_set, mini);
  }
  // The criterion-4 instances rarely reach Z >= c4, so add instances with
  // c0 <= 3 (c4 of order 10) searched over a much larger box.
  LemmaTally wide;
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  const mpq_class Z0(1000000);
  for (long D : {0L, -1L, -2L, -3L, -7L}) {
    for (int n : {3, 4, 5}) {
      for (int k : {0, 1}) {
        if (D != 0 && n == 5) continue;
        miniature::Shape s;
        s.n = n;
        s.k = k;
        s.D = D;
        s.max_c0 = 3;
        for (int r = 0; r < (D == 0 ? 8 : 2); ++r) {
          oracle::Problem p = miniature::random_problem(rng, s);
          ProblemInstance inst = miniature::to_instance(p, Z0);
          ConstantsTable t = compute_constants(inst);
          lemma_check(p, inst, t, oracle::brute_force(p, D == 0 ? 600 : 20), wide);
        }
      }
    }
  }
  // Outside the scope above: fixture 1 is over a real quadratic field, where
  // size(X) may be attained by the conjugate and the lower bound on |beta_j|
  // has no proof. Reported, not counted.
  LemmaTally big;
  Fixture1& f = fixture1();
  if (f.error.empty()) {
    oracle::Problem p = fixture1_problem();
    std::vector<oracle::Pair> sols;
    for (const auto& c : f.report.solutions->solutions) {
      oracle::Pair q;
      q.x = {c.x[0].get_si(), c.x[1].get_si()};
      q.y = {c.y[0].get_si(), c.y[1].get_si()};
      sols.push_back(q);
    }
    lemma_check(p, *f.inst, f.report.constants, sols, big);
  }
  std::ostringstream os;
  os << "miniatures: " << mini.checked << " of " << mini.solutions << " solutions have Z >= c4_i, "
     << mini.violations << " violations; small-c0 instances: " << wide.checked << " of " << wide.solutions
     << " checked, " << wide.violations << " violations";
  if (!mini.first_violation.empty()) os << "; first: " << mini.first_violation;
  if (!wide.first_violation.empty()) os << "; first: " << wide.first_violation;
  os << " [real quadratic fixture 1, not counted: " << big.checked << " of " << big.solutions << " checked, "
     << big.violations << " violate the literal-Z statement";
  if (!big.first_violation.empty()) os << ", e.g. " << big.first_violation;
  os << "]";
  return {mini.violations == 0 && wide.violations == 0 && wide.checked > 0, os.str()};
}

// ---------------------------------------------------------------------------
// Criterion 6: LLL.

using lattice::IntMatrix;
using lattice::IntVector;

mpz_class random_entry(std::mt19937_64& rng, int digits) {
  mpz_class r = 0;
  std::uniform_int_distribution<int> dig(0, 9);
  for (int i = 0; i < digits; ++i) r = r * 10 + dig(rng);
  return std::uniform_int_distribution<int>(0, 1)(rng) ? r : mpz_class(-r);
}

// Shortest nonzero vector by exhaustive Fincke-Pohst enumeration over the
// given basis, within radius^2 = bound.
mpz_class shortest_norm2(const IntMatrix& B, const mpz_class& bound) {
  const size_t d = B.size();
  std::vector<std::vector<long double>> mu(d, std::vector<long double>(d, 0));
  std::vector<long double> bn(d);
  std::vector<std::vector<mpq_class>> bs(d);
  std::vector<mpq_class> bnq(d);
  for (size_t i = 0; i < d; ++i) {
    bs[i].assign(B[i].begin(), B[i].end());
    for (size_t j = 0; j < i; ++j) {
      mpq_class dot = 0;
      for (size_t c = 0; c < B[i].size(); ++c) dot += mpq_class(B[i][c]) * bs[j][c];
      mpq_class m = dot / bnq[j];
      mu[i][j] = static_cast<long double>(m.get_d());
      for (size_t c = 0; c < B[i].size(); ++c) bs[i][c] -= m * bs[j][c];
    }
    bnq[i] = 0;
    for (const auto& v : bs[i]) bnq[i] += v * v;
    bn[i] = static_cast<long double>(bnq[i].get_d());
  }
  const long double R = static_cast<long double>(bound.get_d()) * (1 + 1e-6L);
  mpz_class best = bound;
  std::vector<long> coef(d, 0);
  std::function<void(size_t, long double)> rec = [&](size_t level, long double used) {
    long double centre = 0;
    for (size_t j = level + 1; j < d; ++j) centre -= static_cast<long double>(coef[j]) * mu[j][level];
    long double room = (R - used) / bn[level];
    if (room < 0) return;
    long double half = std::sqrt(room) + 1e-9L;
    long lo = static_cast<long>(std::ceil(centre - half)), hi = static_cast<long>(std::floor(centre + half));
    for (long c = lo; c <= hi; ++c) {
      coef[level] = c;
      long double t = static_cast<long double>(c) - centre;
      long double u = used + t * t * bn[level];
      if (level == 0) {
        bool zero = std::all_of(coef.begin(), coef.end(), [](long x) { return x == 0; });
        if (zero) continue;
        IntVector v(B[0].size(), 0);
        for (size_t i = 0; i < d; ++i) {
          for (size_t k = 0; k < v.size(); ++k) v[k] += coef[i] * B[i][k];
        }
        mpz_class n2 = lattice::norm2(v);
        if (n2 < best) best = n2;
      } else {
        rec(level - 1, u);
      }
    }
    coef[level] = 0;
  };
  rec(d - 1, 0);
  return best;
}

Outcome criterion6(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 6);
  long failures = 0, exhaustive = 0, lattices = 0;
  std::string first;
  for (int t = 0; t < 200; ++t) {
    const size_t d = 2 + static_cast<size_t>(t % 8);
    const int digits = 1 + static_cast<int>(rng() % 30);
    IntMatrix B;
    const int kind = t % 3;
    if (kind == 0) {
      // dense, possibly one extra column
      const size_t cols = d + (t % 2);
      B.assign(d, IntVector(cols));
      for (auto& row : B) {
        for (auto& x : row) x = random_entry(rng, digits);
      }
    } else if (kind == 1) {
      // knapsack: identity plus one large column
      B.assign(d, IntVector(d + 1, 0));
      for (size_t i = 0; i < d; ++i) {
        B[i][i] = 1;
        B[i][d] = random_entry(rng, 30);
      }
    } else {
      // triangular with a large diagonal
      B.assign(d, IntVector(d, 0));
      for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < i; ++j) B[i][j] = random_entry(rng, digits);
        B[i][i] = random_entry(rng, 30);
        if (B[i][i] == 0) B[i][i] = 1;
      }
    }
    if (lattice::gram_determinant(B) == 0) continue;
    ++lattices;
    for (const mpq_class& delta : {mpq_class(3, 4), lattice::kReductionDelta}) {
      lattice::LllResult r = lattice::lll_reduce(B, delta);
      bool ok = lattice::is_lll_reduced(r.basis, delta) &&
                lattice::gram_determinant(r.basis) == lattice::gram_determinant(B);
      // basis = U * B with U unimodular
      IntMatrix UB(d, IntVector(B[0].size(), 0));
      for (size_t i = 0; i < d; ++i) {
        for (size_t k = 0; k < d; ++k) {
          for (size_t c = 0; c < B[0].size(); ++c) UB[i][c] += r.transform[i][k] * B[k][c];
        }
      }
      mpz_class detU = field::det_bareiss(r.transform);
      ok = ok && UB == r.basis && abs(detU) == 1;
      if (d <= 4) {
        ++exhaustive;
        const mpz_class b1 = lattice::norm2(r.basis.front());
        const mpz_class v = shortest_norm2(r.basis, b1);
        mpz_class lim = v;
        lim <<= static_cast<mp_bitcnt_t>(d - 1);
        ok = ok && b1 <= lim;
      }
      if (!ok) {
        ++failures;
        if (first.empty()) first = "lattice " + std::to_string(t) + " (dim " + std::to_string(d) + ")";
      }
    }
  }
  std::ostringstream os;
  os << lattices << " lattices (dim 2..9, entries up to 10^30) at delta 3/4 and 0.99; " << exhaustive
     << " exhaustive shortest-vector checks; " << failures << " failures";
  if (!first.empty()) os << "; first: " << first;
  return {lattices >= 200 && failures == 0, os.str()};
}

// ---------------------------------------------------------------------------
// Criterion 7: the split.

struct SplitTally {
  long instances = 0, with_imag_shift = 0, solutions = 0, necessity_failures = 0, mismatches = 0, borderline = 0;
  std::set<bool> classes;
  std::string first;
};

// Both absolute inequalities, evaluated independently of the library.
bool halves_hold(const oracle::Problem& p, long d, const oracle::Pair& s) {
  const bool three = d % 4 == 3;
  const auto alpha = oracle::roots(p.f);
  const long double sd = std::sqrt(static_cast<long double>(d));
  const long double c0 = std::sqrt(static_cast<long double>(p.c0_squared.get_d()));
  const int n = p.n();
  long double re = 1, im = 1;
  for (const auto& a : alpha) {
    const long double ar = a.real();
    long double ha = 0, hb = 0;
    for (size_t i = p.h.size(); i-- > 0;) {
      ha = ha * ar + static_cast<long double>(p.h[i][0]);
      hb = hb * ar + static_cast<long double>(p.h[i][1]);
    }
    // lambda = ha + hb w; w = i sqrt d or (1 + i sqrt d)/2
    const long double l1 = three ? ha + hb / 2 : ha;
    const long double l2 = three ? hb * sd / 2 : hb * sd;
    if (three) {
      const long double u = 2.0L * s.x[0] + s.x[1], v = 2.0L * s.y[0] + s.y[1];
      re *= std::fabs(u - ar * v + 2 * l1);
      im *= std::fabs(s.x[1] - ar * s.y[1] + 2 * l2 / sd);
    } else {
      re *= std::fabs(s.x[0] - ar * s.y[0] + l1);
      im *= std::fabs(s.x[1] - ar * s.y[1] + l2 / sd);
    }
  }
  const long double scale = three ? std::pow(2.0L, n) : 1.0L;
  const long double tol = 1 + 1e-9L;
  return re <= scale * c0 * tol && im <= scale * c0 / std::pow(sd, n) * tol;
}

Outcome criterion7(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 7);
  SplitTally tally;
  long redrawn = 0;
  const mpq_class Z0("1000000000000");
  for (long d : {1L, 2L, 3L, 5L, 7L}) {
    for (int c = 0; c < 3; ++c) {
      for (int attempt = 0;; ++attempt) {
        miniature::Shape s;
        s.n = 4 + c % 2;
        s.D = -d;
        s.totally_real = true;
        s.lambda_imag = c != 2;
        oracle::Problem p = miniature::random_problem(rng, s);
        const bool imag_shift = std::any_of(p.h.begin(), p.h.end(), [](const auto& x) { return x[1] != 0; });
        if (s.lambda_imag && !imag_shift) continue;
        ProblemInstance inst = miniature::to_instance(p, Z0);
        SolveOptions opt;
        opt.enumeration.budget = 1e9;
        split::SplitReport rep = split::solve_split(inst, opt);
        const std::vector<oracle::Pair> got = miniature::pairs(*rep.solutions);
        const long box = std::max(10L, max_coord(got));
        if (box > 30) {
          ++redrawn;
          if (attempt > 100) throw std::runtime_error("no split instance with a small box");
          continue;
        }
        ++tally.instances;
        tally.with_imag_shift += imag_shift;
        tally.classes.insert(rep.problem.three_mod_four);
        tally.borderline += static_cast<long>(rep.solutions->borderline.size());
        const auto want = oracle::brute_force(p, box);
        tally.solutions += static_cast<long>(want.size());
        for (const auto& q : want) {
          if (!halves_hold(p, d, q)) {
            ++tally.necessity_failures;
            if (tally.first.empty()) tally.first = "necessity: " + miniature::describe(p);
          }
        }
        if (got != want) {
          ++tally.mismatches;
          if (tally.first.empty()) {
            tally.first = "recombination: " + miniature::describe(p) + " (pipeline " + std::to_string(got.size()) +
                          ", oracle " + std::to_string(want.size()) + ")";
          }
        }
        break;
      }
    }
  }
  std::ostringstream os;
  os << tally.instances << " instances, d in {1,2,3,5,7} (" << tally.classes.size() << " residue classes), "
     << tally.with_imag_shift << " with an imaginary shift; " << tally.solutions << " oracle solutions; "
     << tally.necessity_failures << " necessity failures, " << tally.mismatches << " recombination mismatches, "
     << tally.borderline << " borderline; " << redrawn << " redrawn";
  if (!tally.first.empty()) os << "; first: " << tally.first;
  return {tally.necessity_failures == 0 && tally.mismatches == 0 && tally.borderline == 0 &&
              tally.classes.size() == 2 && tally.with_imag_shift > 0,
          os.str()};
}

std::set<int> parse_list(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string only, expected;
  std::uint64_t seed = 20240601;
  app.add_option("--only", only, "comma-separated criteria to run");
  app.add_option("--expected-failures", expected, "comma-separated criteria known to fail");
  app.add_option("--seed", seed, "seed of the randomized suites");
  CLI11_PARSE(app, argc, argv);

  const std::set<int> selected = only.empty() ? std::set<int>{1, 2, 3, 4, 5, 6, 7} : parse_list(only);
  const std::set<int> known = parse_list(expected);
  const std::map<int, std::function<Outcome()>> criteria = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, [&] { return criterion4(seed); }},
      {5, [&] { return criterion5(seed); }},
      {6, [&] { return criterion6(seed); }},
      {7, [&] { return criterion7(seed); }},
  };

  std::set<int> failed;
  for (const auto& [id, fn] : criteria) {
    if (!selected.count(id)) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) failed.insert(id);
    std::printf("criterion %d: %s%s -- %s [%.1f s]\n", id, o.pass ? "PASS" : "FAIL",
                !o.pass && known.count(id) ? " (known)" : (o.pass && known.count(id) ? " (unexpectedly)" : ""),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::set<int> expected_here;
  for (int id : known) {
    if (selected.count(id)) expected_here.insert(id);
  }
  if (failed != expected_here) {
    std::printf("result: failing criteria differ from the expected set\n");
    return 1;
  }
  std::printf("result: %zu of %zu criteria pass%s\n", selected.size() - failed.size(), selected.size(),
              failed.empty() ? "" : " (remaining failures are known)");
  return 0;
}
