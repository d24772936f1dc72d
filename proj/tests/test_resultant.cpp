#include <doctest.h>

#include <string>

#include "relthue/errors.hpp"
#include "relthue/resultant/resultant.hpp"

using namespace relthue;
using namespace relthue::resultant;

namespace {

Coords co(long a, long b) { return Coords{mpz_class(a), mpz_class(b)}; }

FieldPoly rational_poly(long D, std::initializer_list<long> descending) {
  auto M = std::make_shared<const GroundField>(GroundField::quadratic(D));
  std::vector<Coords> c;
  for (long x : descending) c.insert(c.begin(), co(x, 0));
  return FieldPoly(M, c);
}

}  // namespace

// Reference resultants from an independent symbolic computation.
TEST_CASE("exact resultants over Z[i sqrt 2]") {
  FieldPoly f = rational_poly(-2, {1, -1, -4, 3, 3, -1});
  CHECK(exact_resultant(f, co(1, 1), co(2, 0)) == co(-33, -62));
  CHECK(exact_resultant(f, co(0, 0), co(0, 0)) == co(1, 0));
  CHECK(exact_resultant(f, co(-2, 3), co(1, -1)) == co(99, 1547));
  CHECK(exact_resultant(f, co(4, 0), co(0, -3)) == co(20087, 6369));
}

TEST_CASE("exact resultants over Z[(1 + sqrt 5)/2]") {
  FieldPoly f = rational_poly(5, {1, 0, 0, -2});
  CHECK(exact_resultant(f, co(1, 1), co(2, 0)) == co(5, 20));
  CHECK(exact_resultant(f, co(3, 0), co(0, -1)) == co(33, -14));
}

TEST_CASE("bound check on the resultant") {
  const GroundField M = GroundField::quadratic(-2);
  CHECK(resultant_within(M, co(-3, 2), 25));   // |.|^2 = 9 + 8
  CHECK(resultant_within(M, co(3, 2), mpq_class(17)));
  CHECK_FALSE(resultant_within(M, co(3, 2), mpq_class(4)));
  CHECK_FALSE(resultant_within(M, co(-33, -62), 93));  // |.|^2 = 8777
  CHECK(resultant_within(M, co(-33, -62), 94));
}

TEST_CASE("the Thue form of the resultant problem") {
  ResultantProblem rp{rational_poly(-2, {1, -1, -4, 3, 3, -1}), 25};
  ProblemInstance inst = to_thue_instance(rp, 1000);
  CHECK(inst.n() == 5);
  CHECK(inst.k() == 0);
  CHECK(inst.rhs().c0_squared == 625);
  // For (X, Y) the product equals the resultant.
  auto e = enumeration::exact_product(inst, co(1, 1), co(2, 0));
  REQUIRE(e);
  CHECK(*e == co(-33, -62));

  CHECK_THROWS_AS(to_thue_instance({rational_poly(-2, {2, 0, 0, 1}), 1}, 10), InvalidInput);
  CHECK_THROWS_AS(to_thue_instance({rational_poly(-2, {1, 0, 1}), 1}, 10), InvalidInput);
  CHECK_THROWS_AS(to_thue_instance({rational_poly(-2, {1, -3, 3, -1}), 1}, 10), NotSquarefree);
}

TEST_CASE("factor rendering") {
  const GroundField M = GroundField::quadratic(-2);
  QuadraticFactor q{co(1, 1), co(2, 0), co(-33, -62)};
  std::string s = q.to_string(M);
  CHECK(s.find("t^2") == 0);
  CHECK(s.find("*t") != std::string::npos);
}

TEST_CASE("small resultant problem end to end") {
  // Every g found has |Res| <= c, and the exact check agrees.
  ResultantProblem rp{rational_poly(-1, {1, 0, -5, 0, 4, -1}), 3};
  ResultantReport rep = solve_resultant(rp, 6);
  CHECK(rep.via_split);
  CHECK(rep.borderline.empty());
  CHECK_FALSE(rep.factors.empty());
  for (const auto& q : rep.factors) {
    CHECK(q.resultant == exact_resultant(rp.f, q.X, q.Y));
    CHECK(resultant_within(rp.f.field(), q.resultant, rp.c));
  }
}
