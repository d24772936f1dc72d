#include "relthue/enumeration/verify.hpp"

#include "relthue/errors.hpp"
#include "relthue/field/exact.hpp"

namespace relthue::enumeration {

namespace {

using field::QuadInt;
using field::QuadraticRing;

constexpr int kFirstDigits = 30;
constexpr int kMaxDigits = 480;

Ball rhs_squared(const ProblemInstance& inst, const Ball& Z) {
  const Precision prec = Z.precision();
  Ball r = Ball::from_mpq(inst.rhs().c0_squared, prec);
  if (inst.k() > 0) r *= numeric::pow(Z * Z, static_cast<unsigned long>(inst.k()));
  return r;
}

Verdict interval_verdict(const Ball& lhs2, const Ball& rhs2) {
  if (lhs2.upper() <= rhs2.lower()) return Verdict::Solution;
  if (rhs2.upper() < lhs2.lower()) return Verdict::NotSolution;
  return Verdict::Borderline;
}

template <class R, class Make>
std::vector<R> ring_poly(const FieldPoly& p, Make make) {
  std::vector<R> out;
  for (const auto& c : p.coefficients()) out.push_back(make(c));
  return out;
}

// p(t) = h(t) - Y t + X
template <class R>
std::vector<R> linear_shift(std::vector<R> h, const R& X, const R& Y, const R& zero) {
  while (h.size() < 2) h.push_back(zero);
  h[0] += X;
  h[1] -= Y;
  return h;
}

mpz_class pow_mpz(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

QuadInt pow_quad(const QuadInt& b, int e) {
  QuadInt r = b.one();
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Exact |R|^2 <= c0^2 Z^(2k) given the exact product R.
Verdict exact_verdict(const ProblemInstance& inst, const Coords& R, const Coords& x, const Coords& y) {
  const mpz_class& num = inst.rhs().c0_squared.get_num();
  const mpz_class& den = inst.rhs().c0_squared.get_den();
  const unsigned long k = static_cast<unsigned long>(inst.k());
  const GroundField& F = inst.field();
  if (F.degree() == 1) {
    mpz_class Z = std::max(abs(x[0]), abs(y[0]));
    mpz_class lhs = R[0] * R[0] * den;
    mpz_class rhs = num * pow_mpz(Z, 2 * k);
    return lhs <= rhs ? Verdict::Solution : Verdict::NotSolution;
  }
  const QuadraticRing& ring = *F.quadratic_ring();
  QuadInt r(R[0], R[1], ring), X(x[0], x[1], ring), Y(y[0], y[1], ring);
  if (ring.imaginary()) {
    mpz_class Zsq = std::max(X.norm(), Y.norm());
    mpz_class lhs = r.norm() * den;
    mpz_class rhs = num * pow_mpz(Zsq, k);
    return lhs <= rhs ? Verdict::Solution : Verdict::NotSolution;
  }
  // Real quadratic: the size is attained by one of the four conjugates.
  QuadInt best = X * X;
  for (const QuadInt& c : {X.conj(), Y, Y.conj()}) {
    QuadInt sq = c * c;
    if (field::sign_real(sq - best, ring) > 0) best = sq;
  }
  QuadInt diff = pow_quad(best, static_cast<int>(k)) * num - r * r * den;
  return field::sign_real(diff, ring) >= 0 ? Verdict::Solution : Verdict::NotSolution;
}

}  // namespace

CBall product_enclosure(const ProblemInstance& inst, const Coords& x, const Coords& y, int digits) {
  std::vector<CBall> a = inst.alphas(digits), l = inst.lambdas(digits);
  Precision prec = numeric::bits_for_digits(digits);
  CBall X = inst.field().embed(x, prec), Y = inst.field().embed(y, prec);
  CBall P = CBall::exact(1, prec);
  for (size_t j = 0; j < a.size(); ++j) P *= X - a[j] * Y + l[j];
  return P;
}

Ball size_enclosure(const GroundField& field, const Coords& x, const Coords& y, Precision prec) {
  return numeric::max(field.house(x, prec), field.house(y, prec));
}

std::optional<Coords> exact_product(const ProblemInstance& inst, const Coords& x, const Coords& y) {
  const ExactForm* e = inst.exact();
  if (!e || !e->f.is_monic()) return std::nullopt;
  const GroundField& F = inst.field();
  if (F.degree() == 1) {
    auto make = [](const Coords& c) { return c[0]; };
    auto f = ring_poly<mpz_class>(e->f, make);
    auto p = linear_shift(ring_poly<mpz_class>(e->h, make), x[0], y[0], mpz_class(0));
    return Coords{field::multiplication_det(f, p)};
  }
  if (const auto& ring = F.quadratic_ring()) {
    auto make = [&](const Coords& c) { return QuadInt(c[0], c[1], *ring); };
    auto f = ring_poly<QuadInt>(e->f, make);
    auto p = linear_shift(ring_poly<QuadInt>(e->h, make), make(x), make(y), QuadInt(0, 0, *ring));
    QuadInt d = field::multiplication_det(f, p);
    return Coords{d.a(), d.b()};
  }
  return std::nullopt;
}

Verifier::Verifier(const ProblemInstance& inst)
    : inst_(inst), prec_(numeric::bits_for_digits(kFirstDigits)) {
  alphas_ = inst.alphas(kFirstDigits);
  lambdas_ = inst.lambdas(kFirstDigits);
}

CandidateSolution Verifier::operator()(const Coords& x, const Coords& y) const {
  CandidateSolution c;
  c.x = x;
  c.y = y;

  auto decide = [&](const CBall& P) {
    c.product_abs = numeric::abs(P);
    c.Z = size_enclosure(inst_.field(), x, y, P.precision());
    return interval_verdict(numeric::norm2(P), rhs_squared(inst_, c.Z));
  };

  {
    CBall X = inst_.field().embed(x, prec_), Y = inst_.field().embed(y, prec_);
    CBall P = CBall::exact(1, prec_);
    for (size_t j = 0; j < alphas_.size(); ++j) P *= X - alphas_[j] * Y + lambdas_[j];
    c.verdict = decide(P);
  }
  if (c.verdict == Verdict::Borderline) {
    if (auto R = exact_product(inst_, x, y)) {
      c.exact_value = inst_.field().element_to_string(*R);
      c.verdict = exact_verdict(inst_, *R, x, y);
    }
  }
  for (int digits = 2 * kFirstDigits; c.verdict == Verdict::Borderline && digits <= kMaxDigits; digits *= 2) {
    c.verdict = decide(product_enclosure(inst_, x, y, digits));
  }
  c.verified = c.verdict == Verdict::Solution;
  return c;
}

std::optional<bool> size_within(const GroundField& F, const Coords& x, const Coords& y, const mpq_class& Z0) {
  const mpz_class num2 = Z0.get_num() * Z0.get_num();
  const mpz_class den2 = Z0.get_den() * Z0.get_den();
  if (F.degree() == 1) {
    mpz_class z = std::max(abs(x[0]), abs(y[0]));
    return z * z * den2 <= num2;
  }
  const auto& ring = F.quadratic_ring();
  if (!ring) return std::nullopt;
  QuadInt X(x[0], x[1], *ring), Y(y[0], y[1], *ring);
  if (ring->imaginary()) return std::max(X.norm(), Y.norm()) * den2 <= num2;
  for (const QuadInt& c : {X, X.conj(), Y, Y.conj()}) {
    QuadInt diff = c.like(num2, 0) - c * c * den2;
    if (field::sign_real(diff, *ring) < 0) return false;
  }
  return true;
}

CandidateSolution verify_exact(const ProblemInstance& inst, const Coords& x, const Coords& y) {
  return Verifier(inst)(x, y);
}

}  // namespace relthue::enumeration
