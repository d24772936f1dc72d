#include "relthue/split/split.hpp"

#include <algorithm>

#include "relthue/errors.hpp"

namespace relthue::split {

namespace {

using enumeration::CandidateSolution;
using enumeration::SolutionSet;
using enumeration::Verdict;
using numeric::PolyZ;

constexpr int kDigits = 60;

PolyZ combine(const PolyZ& a, long sa, const PolyZ& b, long sb) {
  std::vector<mpz_class> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (size_t t = 0; t < a.coefficients().size(); ++t) c[t] += sa * a.coefficients()[t];
  for (size_t t = 0; t < b.coefficients().size(); ++t) c[t] += sb * b.coefficients()[t];
  return PolyZ(std::move(c));
}

mpq_class pow_q(const mpq_class& b, int e) {
  mpq_class r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

SplitProblem split(const ProblemInstance& inst) {
  if (inst.k() != 0) throw UnsupportedRHS("the split needs a constant right side (k = 0), got k = " + std::to_string(inst.k()));
  const auto& ring = inst.field().quadratic_ring();
  if (!ring || !ring->imaginary()) throw NotTotallyReal("the split needs an imaginary quadratic ground field");
  const int n = inst.n();
  for (int j = 0; j < n; ++j) {
    if (!inst.source().alpha_real(j)) throw NotTotallyReal("alpha_" + std::to_string(j + 1) + " is not certified real");
  }

  SplitProblem sp;
  sp.d = -ring->D;
  sp.three_mod_four = sp.d % 4 == 3;
  const Precision prec = numeric::bits_for_digits(kDigits);
  const std::vector<CBall> alphas = inst.alphas(kDigits), lambdas = inst.lambdas(kDigits);
  for (const auto& a : alphas) {
    if (a.re().contains_zero()) throw DegenerateAlpha("some alpha_j may be zero");
  }
  for (const auto& l : lambdas) sp.lambda_decomp.emplace_back(l.re(), l.im());

  const mpq_class c0sq = inst.rhs().c0_squared;
  const mpq_class dn = pow_q(mpq_class(sp.d), n);
  const mpq_class four_n = pow_q(mpq_class(4), n);
  const mpq_class re_c0sq = sp.three_mod_four ? mpq_class(four_n * c0sq) : c0sq;
  const mpq_class im_c0sq = sp.three_mod_four ? mpq_class(four_n * c0sq / dn) : mpq_class(c0sq / dn);
  // |Re X|, |Im X| <= |X|; x2 = Im X / sqrt d (or 2 Im X / sqrt d), u = 2 Re X.
  const mpq_class sub_Z0 = sp.three_mod_four ? mpq_class(2 * inst.Z0()) : inst.Z0();

  auto Q = std::make_shared<const GroundField>(GroundField::rational());
  const ExactForm* e = inst.exact();
  if (e && e->f.is_rational()) {
    const PolyZ f = e->f.coordinate(0);
    const PolyZ ha = e->h.degree() >= 0 ? e->h.coordinate(0) : PolyZ();
    const PolyZ hb = e->h.degree() >= 0 ? e->h.coordinate(1) : PolyZ();
    const PolyZ re_shift = sp.three_mod_four ? combine(ha, 2, hb, 1) : ha;
    auto fp = FieldPoly::from_integers(Q, f);
    sp.real_part.emplace(ProblemInstance::from_polynomials(fp, FieldPoly::from_integers(Q, re_shift),
                                                           Rhs{re_c0sq, 0}, sub_Z0));
    sp.imag_part.emplace(ProblemInstance::from_polynomials(fp, FieldPoly::from_integers(Q, hb),
                                                           Rhs{im_c0sq, 0}, sub_Z0));
    return sp;
  }

  // Numeric conjugates only: shifts from the real and imaginary parts.
  const Ball sqrt_d = numeric::sqrt(Ball::exact(sp.d, prec));
  std::vector<CBall> a_real, l_re, l_im;
  for (int j = 0; j < n; ++j) {
    const auto& [l1, l2] = sp.lambda_decomp[static_cast<size_t>(j)];
    a_real.emplace_back(alphas[static_cast<size_t>(j)].re(), Ball(prec));
    Ball s1 = sp.three_mod_four ? Ball::exact(2, prec) * l1 : l1;
    Ball s2 = sp.three_mod_four ? Ball::exact(2, prec) * l2 / sqrt_d : l2 / sqrt_d;
    l_re.emplace_back(s1, Ball(prec));
    l_im.emplace_back(s2, Ball(prec));
  }
  sp.real_part.emplace(Q, std::make_shared<FixedSource>(a_real, l_re), Rhs{re_c0sq, 0}, sub_Z0);
  sp.imag_part.emplace(Q, std::make_shared<FixedSource>(a_real, l_im), Rhs{im_c0sq, 0}, sub_Z0);
  return sp;
}

std::optional<Coords> lift(const SplitProblem& sp, const mpz_class& real_value, const mpz_class& imag_value) {
  if (!sp.three_mod_four) return Coords{real_value, imag_value};
  mpz_class diff = real_value - imag_value;
  if (mpz_odd_p(diff.get_mpz_t())) return std::nullopt;
  return Coords{diff / 2, imag_value};
}

SolutionSet recombine(const SplitProblem& sp, const SolutionSet& re, const SolutionSet& im,
                      const ProblemInstance& original) {
  SolutionSet out;
  out.enumeration_bound = std::max(re.enumeration_bound, im.enumeration_bound);
  const enumeration::Verifier verify(original);
  for (const auto& r : re.solutions) {
    for (const auto& s : im.solutions) {
      auto x = lift(sp, r.x[0], s.x[0]);
      auto y = lift(sp, r.y[0], s.y[0]);
      if (!x || !y) continue;
      ++out.candidates_verified;
      CandidateSolution c = verify(*x, *y);
      if (c.verdict == Verdict::Solution) {
        Ball z0 = Ball::from_mpq(original.Z0(), c.Z.precision());
        if (c.Z.upper() <= z0.lower()) {
          out.solutions.push_back(std::move(c));
        } else if (!(z0.upper() < c.Z.lower())) {
          const std::optional<bool> exact = enumeration::size_within(original.field(), c.x, c.y, original.Z0());
          if (exact && *exact) {
            out.solutions.push_back(std::move(c));
          } else if (!exact) {
            c.verdict = Verdict::Borderline;
            c.verified = false;
            out.borderline.push_back(std::move(c));
          }
        }
      } else if (c.verdict == Verdict::Borderline) {
        out.borderline.push_back(std::move(c));
      }
    }
  }
  out.candidates_filtered = out.candidates_verified;
  std::sort(out.solutions.begin(), out.solutions.end(), enumeration::canonical_less);
  std::sort(out.borderline.begin(), out.borderline.end(), enumeration::canonical_less);
  return out;
}

SplitReport solve_split(const ProblemInstance& inst, const SolveOptions& opt) {
  SplitReport rep;
  rep.problem = split(inst);
  rep.real_report = solve(*rep.problem.real_part, opt);
  rep.imag_report = solve(*rep.problem.imag_part, opt);
  if (rep.real_report.solutions && rep.imag_report.solutions) {
    rep.solutions = recombine(rep.problem, *rep.real_report.solutions, *rep.imag_report.solutions, inst);
  }
  return rep;
}

}  // namespace relthue::split
