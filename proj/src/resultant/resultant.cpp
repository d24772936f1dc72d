#include "relthue/resultant/resultant.hpp"

#include <algorithm>

#include "relthue/errors.hpp"

namespace relthue::resultant {

namespace {

using field::QuadInt;

// f mod (t^2 - Y t + X) by Horner: (a t + b) t = (a Y + b) t - a X.
template <class R>
R resultant_with_quadratic(const std::vector<R>& f_asc, const R& X, const R& Y, const R& zero) {
  R a = zero, b = zero;
  for (auto it = f_asc.rbegin(); it != f_asc.rend(); ++it) {
    R na = a * Y + b;
    R nb = *it - a * X;
    a = std::move(na);
    b = std::move(nb);
  }
  return a * a * X + b * a * Y + b * b;
}

}  // namespace

std::string QuadraticFactor::to_string(const GroundField& M) const {
  return "t^2 - (" + M.element_to_string(Y) + ")*t + (" + M.element_to_string(X) + ")";
}

ProblemInstance to_thue_instance(const ResultantProblem& rp, const mpq_class& Z0) {
  if (rp.f.degree() < 3) throw InvalidInput("f must have degree >= 3, got " + std::to_string(rp.f.degree()));
  if (!rp.f.is_monic()) throw InvalidInput("f must be monic");
  if (rp.c <= 0) throw InvalidInput("c must be positive");
  const int m = rp.f.field().degree();
  Coords zero(static_cast<size_t>(m), 0), one = zero;
  one[0] = 1;
  FieldPoly h(rp.f.field_ptr(), {zero, zero, one});
  return ProblemInstance::from_polynomials(rp.f, h, Rhs::from_c0(rp.c, 0), Z0);
}

Coords exact_resultant(const FieldPoly& f, const Coords& X, const Coords& Y) {
  const GroundField& M = f.field();
  if (M.degree() == 1) {
    std::vector<mpz_class> c;
    for (const auto& co : f.coefficients()) c.push_back(co[0]);
    return {resultant_with_quadratic<mpz_class>(c, X[0], Y[0], 0)};
  }
  const auto& ring = M.quadratic_ring();
  if (!ring) throw InvalidInput("exact resultants need Q or a quadratic field");
  std::vector<QuadInt> c;
  for (const auto& co : f.coefficients()) c.emplace_back(co[0], co[1], *ring);
  QuadInt r = resultant_with_quadratic(c, QuadInt(X[0], X[1], *ring), QuadInt(Y[0], Y[1], *ring),
                                       QuadInt(0, 0, *ring));
  return {r.a(), r.b()};
}

bool resultant_within(const GroundField& M, const Coords& res, const mpq_class& c) {
  const mpq_class c2 = c * c;
  if (M.degree() == 1) return mpq_class(res[0] * res[0]) <= c2;
  const auto& ring = M.quadratic_ring();
  if (!ring) throw InvalidInput("exact resultants need Q or a quadratic field");
  QuadInt r(res[0], res[1], *ring);
  if (ring->imaginary()) return mpq_class(r.norm()) <= c2;
  QuadInt diff = QuadInt(c2.get_num(), 0, *ring) - r * r * c2.get_den();
  return field::sign_real(diff, *ring) >= 0;
}

ResultantReport solve_resultant(const ResultantProblem& rp, const mpq_class& Z0, const SolveOptions& opt) {
  ResultantReport rep;
  ProblemInstance inst = to_thue_instance(rp, Z0);

  const auto& ring = inst.field().quadratic_ring();
  bool real_roots = rp.f.is_rational();
  for (int j = 0; real_roots && j < inst.n(); ++j) real_roots = inst.source().alpha_real(j);
  rep.via_split = ring && ring->imaginary() && real_roots;

  const enumeration::SolutionSet* sols = nullptr;
  if (rep.via_split) {
    rep.split_report = split::solve_split(inst, opt);
    if (rep.split_report->solutions) sols = &*rep.split_report->solutions;
  } else {
    rep.direct_report = solve(inst, opt);
    if (rep.direct_report->solutions) sols = &*rep.direct_report->solutions;
  }
  if (!sols) return rep;

  rep.borderline = sols->borderline;
  const bool exact = inst.m() == 1 || ring.has_value();
  for (const auto& s : sols->solutions) {
    QuadraticFactor g{s.x, s.y, exact ? exact_resultant(rp.f, s.x, s.y) : Coords{}};
    if (exact && !resultant_within(inst.field(), g.resultant, rp.c)) {
      rep.notes.push_back("pipeline solution " + g.to_string(inst.field()) + " fails the exact resultant check");
      continue;
    }
    rep.factors.push_back(std::move(g));
  }
  return rep;
}

}  // namespace relthue::resultant
