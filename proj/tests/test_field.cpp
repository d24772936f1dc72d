#include <doctest.h>

#include <memory>

#include "relthue/errors.hpp"
#include "relthue/field/exact.hpp"
#include "relthue/field/field_poly.hpp"

using namespace relthue;
using namespace relthue::field;

namespace {

bool near(const Real& got, double want, double tol = 1e-12) {
  double g = got.to_double();
  return g >= want - tol * (1 + want) && g <= want + tol * (1 + want);
}

}  // namespace

TEST_CASE("quadratic rings use the standard integral basis") {
  auto r = QuadraticRing::for_radicand(-3);
  CHECK(r.T == 1);
  CHECK(r.N == 1);
  r = QuadraticRing::for_radicand(2);
  CHECK(r.T == 0);
  CHECK(r.N == -2);
  r = QuadraticRing::for_radicand(5);
  CHECK(r.T == 1);
  CHECK(r.N == -1);
  CHECK_THROWS_AS(QuadraticRing::for_radicand(8), InvalidInput);
  CHECK_THROWS_AS(QuadraticRing::for_radicand(1), InvalidInput);
}

TEST_CASE("quadratic integer arithmetic") {
  auto R = QuadraticRing::for_radicand(-3);
  QuadInt w(0, 1, R);
  // w^2 = w - 1, w^3 = -1
  CHECK(w * w == QuadInt(-1, 1, R));
  CHECK(w * w * w == QuadInt(-1, 0, R));
  CHECK(w.norm() == 1);
  QuadInt x(2, 3, R), y(-1, 4, R);
  CHECK(exact_div(x * y, y) == x);
  CHECK_THROWS(exact_div(x, QuadInt(2, 0, R)));
  CHECK((x * x.conj()).b() == 0);
  CHECK((x * x.conj()).a() == x.norm());

  auto R2 = QuadraticRing::for_radicand(2);
  CHECK(sign_real(QuadInt(-1, 1, R2), R2) == 1);   // sqrt2 - 1
  CHECK(sign_real(QuadInt(3, -2, R2), R2) == 1);   // 3 - 2 sqrt2
  CHECK(sign_real(QuadInt(-3, 2, R2), R2) == -1);
  CHECK(sign_with_sqrt(577, -408, 2) == 1);
}

TEST_CASE("basis constants of the conjugate matrix") {
  SUBCASE("Q") {
    auto F = GroundField::rational();
    CHECK(near(F.c6(), 1));
    CHECK(near(F.c7(), 1));
  }
  SUBCASE("Q(sqrt 2)") {
    auto F = GroundField::quadratic(2);
    CHECK(near(F.c6(), 2.414213562373095));
    CHECK(near(F.c7(), 1));
    CHECK(F.real_basis());
  }
  SUBCASE("Q(sqrt 5)") {
    auto F = GroundField::quadratic(5);
    CHECK(near(F.c6(), 2.618033988749895));
    CHECK(near(F.c7(), 1));
  }
  SUBCASE("Q(i sqrt 3)") {
    auto F = GroundField::quadratic(-3);
    CHECK(near(F.c6(), 2));
    CHECK(near(F.c7(), 1.1547005383792515));
    CHECK_FALSE(F.real_basis());
  }
  SUBCASE("Q(i sqrt 2)") {
    auto F = GroundField::quadratic(-2);
    CHECK(near(F.c6(), 1 + 1.4142135623730951));
    CHECK(near(F.c7(), 1));
  }
}

TEST_CASE("coordinate bound from a size bound") {
  CHECK(GroundField::quadratic(2).size_to_coord_bound(100) == 100);
  // c7 = 2/sqrt3 for Q(i sqrt 3)
  CHECK(GroundField::quadratic(-3).size_to_coord_bound(100) == 115);
}

TEST_CASE("embeddings and house") {
  auto F = GroundField::quadratic(2);
  Coords x{mpz_class(1), mpz_class(1)};  // 1 + sqrt2
  auto conj = F.conjugates(x, 128);
  CHECK(near(Real(conj[0].re().mid()), 2.414213562373095));
  CHECK(near(Real(conj[1].re().mid()), -0.41421356237309503));
  CHECK(near(F.house(x, 128).upper(), 2.414213562373095));
  CHECK(F.element_to_string(x) != "");
}

TEST_CASE("explicit conjugate matrices") {
  const Precision p = 128;
  ComplexMatrix S{{CBall::exact(1, p), CBall::exact(1, p)}, {CBall::exact(1, p), CBall::exact(-1, p)}};
  auto F = GroundField::from_conjugates(S);
  CHECK(F.degree() == 2);
  CHECK(near(F.c6(), 2));
  CHECK(near(F.c7(), 1));
  ComplexMatrix singular{{CBall::exact(1, p), CBall::exact(2, p)}, {CBall::exact(1, p), CBall::exact(2, p)}};
  CHECK_THROWS_AS(GroundField::from_conjugates(singular), SingularBasis);
}

TEST_CASE("exact determinants and resultants") {
  std::vector<std::vector<mpz_class>> a{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}};
  CHECK(det_bareiss(a) == 6);  // 2(6-2) - 0 + 1(1-3)
  std::vector<std::vector<mpz_class>> pivot{{0, 1}, {1, 0}};
  CHECK(det_bareiss(pivot) == -1);
  // Res(t^2 - 2, t - 3) = 9 - 2
  std::vector<mpz_class> f{-2, 0, 1}, g{-3, 1};
  CHECK(sylvester_resultant(f, g) == 7);
  // prod over roots of t^2 - 2 of (t + 1) = (1 - 2) = -1
  CHECK(multiplication_det(f, std::vector<mpz_class>{1, 1}) == -1);
  std::vector<mpz_class> quintic{-1, 3, 3, -4, -1, 1};
  std::vector<mpz_class> h{5, -2, 0, 1};
  CHECK(multiplication_det(quintic, h) == sylvester_resultant(quintic, h));
}

TEST_CASE("polynomials over the ring of integers") {
  auto M = std::make_shared<const GroundField>(GroundField::quadratic(-2));
  auto c = [](long a, long b) { return Coords{mpz_class(a), mpz_class(b)}; };
  FieldPoly f(M, {c(-1, 0), c(3, 0), c(3, 0), c(-4, 0), c(-1, 0), c(1, 0)});
  CHECK(f.is_monic());
  CHECK(f.is_rational());
  CHECK(f.is_squarefree());
  FieldPoly g(M, {c(1, 1), c(0, 0), c(1, 0)});
  CHECK_FALSE(g.is_rational());
  CHECK(g.coordinate(1) == numeric::PolyZ::from_descending({0, 0, 1}));
  // (t - w)^2 has a repeated root
  FieldPoly sq(M, {c(-2, 0), c(0, -2), c(1, 0)});
  CHECK_FALSE(sq.is_squarefree());
}
