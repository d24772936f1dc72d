#include "relthue/solver.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

namespace relthue {

namespace {

// The coordinate box can hold pairs with Z > Z0; drop them, and keep the
// undecidable ones out of the solution list.
void restrict_size(enumeration::SolutionSet& set, const GroundField& field, const mpq_class& Z0) {
  std::vector<enumeration::CandidateSolution> kept;
  for (auto& c : set.solutions) {
    Ball z0 = Ball::from_mpq(Z0, c.Z.precision());
    if (c.Z.upper() <= z0.lower()) {
      kept.push_back(std::move(c));
    } else if (!(z0.upper() < c.Z.lower())) {
      const std::optional<bool> exact = enumeration::size_within(field, c.x, c.y, Z0);
      if (exact && *exact) {
        kept.push_back(std::move(c));
      } else if (!exact) {
        c.verdict = enumeration::Verdict::Borderline;
        c.verified = false;
        set.borderline.push_back(std::move(c));
      }
    }
  }
  set.solutions = std::move(kept);
  std::sort(set.borderline.begin(), set.borderline.end(), enumeration::canonical_less);
}

Coords add(const Coords& a, const Coords& b, int sign) {
  Coords r = a;
  for (size_t t = 0; t < r.size(); ++t) r[t] += sign * b[t];
  return r;
}

// lambda = a + b*alpha with a, b in Z_M: the lattice then always contains a
// short vector and the reduction stalls, but X' = X + a, Y' = Y - b turns the
// problem homogeneous. For k > 0 the right side grows to c0 (1 + s)^k Z'^k
// with s >= house(a), house(b), which holds for every Z' >= 1.
std::optional<SolveReport> solve_shifted(const ProblemInstance& inst, const SolveOptions& opt) {
  const ExactForm* e = inst.exact();
  if (!e || inst.homogeneous() || e->h.degree() > 1) return std::nullopt;
  const GroundField& M = inst.field();
  const size_t m = static_cast<size_t>(inst.m());
  const Coords zero(m, 0);
  const Coords a = e->h.coefficients().at(0);
  const Coords b = e->h.degree() == 1 ? e->h.coefficients()[1] : zero;
  const mpz_class s = numeric::max(M.house(a, 128).upper(), M.house(b, 128).upper()).ceil();

  Rhs rhs = inst.rhs();
  for (int i = 0; i < rhs.k; ++i) rhs.c0_squared *= mpq_class((1 + s) * (1 + s));
  ProblemInstance shifted =
      ProblemInstance::from_polynomials(e->f, FieldPoly(inst.field_ptr(), {zero}), rhs, inst.Z0() + s);
  SolveReport rep = solve(shifted, opt);
  rep.notes.insert(rep.notes.begin(), "lambda = a + b*alpha: solved the homogeneous problem in X + a, Y - b "
                                      "(the reduction and the bound A_R refer to those coordinates)");
  if (!rep.solutions) return rep;

  enumeration::SolutionSet back;
  back.enumeration_bound = rep.solutions->enumeration_bound;
  back.candidates_filtered = rep.solutions->candidates_filtered;
  const enumeration::Verifier verify(inst);
  for (const auto* list : {&rep.solutions->solutions, &rep.solutions->borderline}) {
    for (const auto& c : *list) {
      enumeration::CandidateSolution o = verify(add(c.x, a, -1), add(c.y, b, 1));
      ++back.candidates_verified;
      if (o.verdict == enumeration::Verdict::Solution) {
        back.solutions.push_back(std::move(o));
      } else if (o.verdict == enumeration::Verdict::Borderline) {
        back.borderline.push_back(std::move(o));
      }
    }
  }
  std::sort(back.solutions.begin(), back.solutions.end(), enumeration::canonical_less);
  restrict_size(back, inst.field(), inst.Z0());
  rep.solutions = std::move(back);
  return rep;
}

}  // namespace

SolveReport solve(const ProblemInstance& inst, const SolveOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  if (auto shifted = solve_shifted(inst, opt)) {
    shifted->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(*shifted);
  }
  SolveReport rep;
  rep.constants = compute_constants(inst, opt.eps, opt.optimize_eps);
  const mpz_class A0 = inst.A0();

  if (inst.reducible()) {
    mpz_class worst = 0;
    for (int i = 0; i < inst.n(); ++i) {
      rep.traces.push_back(lattice::reduce_loop(inst, rep.constants, i, A0, opt.reduction));
      if (worst < rep.traces.back().final_bound) worst = rep.traces.back().final_bound;
    }
    rep.enumeration_bound = worst < A0 ? worst : A0;
    const auto kind = inst.field().kind();
    if (kind == field::FieldKind::RealQuadratic || (kind == field::FieldKind::Explicit && inst.field().degree() > 1)) {
      // The lower bound on |beta_j| holds for max(|X|, |Y|) in the first
      // embedding only; a conjugate may carry the size.
      rep.notes.push_back("M has an embedding other than the first that can attain size(X): "
                          "solutions small in the first embedding but with large conjugates "
                          "may lie outside the reduced box");
    }
  } else {
    rep.direct_enumeration = true;
    rep.enumeration_bound = A0;
    rep.notes.push_back("n <= 2m+k+1: no reduction possible, enumerating the A0 box");
  }

  if (!opt.trace_only) {
    rep.solutions = enumeration::enumerate_tiny(inst, rep.enumeration_bound, opt.enumeration);
    restrict_size(*rep.solutions, inst.field(), inst.Z0());
    if (!rep.solutions->borderline.empty()) {
      rep.notes.push_back(std::to_string(rep.solutions->borderline.size()) + " borderline candidate(s)");
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace relthue
