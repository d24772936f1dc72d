#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "miniature.hpp"
#include "relthue/errors.hpp"
#include "relthue/io/problem_file.hpp"
#include "relthue/split/split.hpp"

using namespace relthue;

namespace {

std::string fixture(const char* name) { return std::string(RELTHUE_SOURCE_DIR) + "/fixtures/" + name; }

// Oracle solutions with size <= Z0.
std::vector<oracle::Pair> within(const oracle::Problem& p, long box, double Z0) {
  std::vector<oracle::Pair> out;
  for (const auto& s : oracle::brute_force(p, box)) {
    if (oracle::size(p, s) <= Z0) out.push_back(s);
  }
  return out;
}

oracle::Problem totally_real(std::mt19937_64& rng, long d, int n, bool imag_shift) {
  miniature::Shape s;
  s.n = n;
  s.D = -d;
  s.totally_real = true;
  s.lambda_imag = imag_shift;
  s.max_c0 = 30;
  return miniature::random_problem(rng, s);
}

}  // namespace

TEST_CASE("lift from the two halves") {
  split::SplitProblem sp;
  sp.d = 2;
  CHECK(*split::lift(sp, 3, -4) == Coords{mpz_class(3), mpz_class(-4)});
  sp.d = 3;
  sp.three_mod_four = true;
  // u = 2 x1 + x2
  CHECK(*split::lift(sp, 7, 1) == Coords{mpz_class(3), mpz_class(1)});
  CHECK(*split::lift(sp, -5, 3) == Coords{mpz_class(-4), mpz_class(3)});
  CHECK_FALSE(split::lift(sp, 4, 1));
}

TEST_CASE("the split needs a totally real, constant right side problem") {
  auto M = std::make_shared<const GroundField>(GroundField::quadratic(-2));
  auto c = [](long a) { return Coords{mpz_class(a), mpz_class(0)}; };
  FieldPoly real_roots(M, {c(-1), c(3), c(3), c(-4), c(-1), c(1)});
  FieldPoly complex_roots(M, {c(1), c(0), c(0), c(0), c(0), c(1)});
  FieldPoly h(M, {c(0)});
  CHECK_THROWS_AS(split::split(ProblemInstance::from_polynomials(real_roots, h, Rhs{1, 1}, 100)), UnsupportedRHS);
  CHECK_THROWS_AS(split::split(ProblemInstance::from_polynomials(complex_roots, h, Rhs{1, 0}, 100)), NotTotallyReal);

  auto Q = std::make_shared<const GroundField>(GroundField::quadratic(2));
  FieldPoly f2(Q, {Coords{mpz_class(-1), mpz_class(0)}, Coords{mpz_class(3), mpz_class(0)},
                   Coords{mpz_class(3), mpz_class(0)}, Coords{mpz_class(-4), mpz_class(0)},
                   Coords{mpz_class(-1), mpz_class(0)}, Coords{mpz_class(1), mpz_class(0)}});
  FieldPoly h2(Q, {Coords{mpz_class(0), mpz_class(0)}});
  CHECK_THROWS_AS(split::split(ProblemInstance::from_polynomials(f2, h2, Rhs{1, 0}, 100)), NotTotallyReal);
}

TEST_CASE("halves of the quintic over Z[i sqrt 2]") {
  split::SplitProblem sp = split::split(io::build_instance(io::load_problem(fixture("sec52.yaml"))));
  CHECK(sp.d == 2);
  CHECK_FALSE(sp.three_mod_four);
  REQUIRE(sp.real_part);
  REQUIRE(sp.imag_part);
  CHECK(sp.real_part->m() == 1);
  CHECK(sp.real_part->n() == 5);
  CHECK(sp.real_part->rhs().c0_squared == 625);
  CHECK(sp.imag_part->rhs().c0_squared == mpq_class(625, 32));
  CHECK(sp.imag_part->homogeneous());
  CHECK_FALSE(sp.real_part->homogeneous());
}

TEST_CASE("every solution restricts to solutions of both halves") {
  std::mt19937_64 rng(17);
  for (long d : {1L, 3L, 7L}) {
    oracle::Problem p = totally_real(rng, d, 4, true);
    CAPTURE(miniature::describe(p));
    ProblemInstance inst = miniature::to_instance(p, 1000);
    split::SplitProblem sp = split::split(inst);
    const auto sols = oracle::brute_force(p, 6);
    for (const auto& s : sols) {
      long re_x = sp.three_mod_four ? 2 * s.x[0] + s.x[1] : s.x[0];
      long re_y = sp.three_mod_four ? 2 * s.y[0] + s.y[1] : s.y[0];
      auto a = enumeration::verify_exact(*sp.real_part, Coords{mpz_class(re_x)}, Coords{mpz_class(re_y)});
      auto b = enumeration::verify_exact(*sp.imag_part, Coords{mpz_class(s.x[1])}, Coords{mpz_class(s.y[1])});
      CHECK(a.verdict == enumeration::Verdict::Solution);
      CHECK(b.verdict == enumeration::Verdict::Solution);
    }
  }
}

TEST_CASE("split pipeline against the oracle") {
  std::mt19937_64 rng(23);
  for (long d : {1L, 2L, 3L}) {
    oracle::Problem p = totally_real(rng, d, 5, d != 2);
    CAPTURE(miniature::describe(p));
    const double Z0 = 8;
    ProblemInstance inst = miniature::to_instance(p, mpq_class(8));
    split::SplitReport rep = split::solve_split(inst);
    REQUIRE(rep.solutions);
    CHECK(rep.solutions->borderline.empty());
    CHECK(miniature::pairs(*rep.solutions) == within(p, 10, Z0));
  }
}
