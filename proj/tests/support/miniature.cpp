#include "miniature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace miniature {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// A root inside Z_M puts a whole line of solutions on the curve; such
// instances are excluded. (Only Q and imaginary fields are generated.)
bool in_ring(const oracle::cld& z, long D) {
  auto integral = [](long double v) { return std::fabs(v - std::round(v)) < 1e-9L; };
  if (D >= 0) return std::fabs(z.imag()) < 1e-9L && integral(z.real());
  const oracle::cld w = oracle::omega(D);
  const long double b = z.imag() / w.imag();
  return integral(b) && integral(z.real() - std::round(b) * w.real());
}

// f is reducible over M when some subset of its roots (at most half of them)
// gives a product polynomial with coefficients in Z_M.
bool reducible(const std::vector<oracle::cld>& r, long D) {
  const size_t n = r.size();
  for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
    if (2 * static_cast<size_t>(__builtin_popcount(mask)) > n) continue;
    std::vector<oracle::cld> g{1};
    for (size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      std::vector<oracle::cld> next(g.size() + 1, 0);
      for (size_t i = 0; i < g.size(); ++i) {
        next[i + 1] += g[i];
        next[i] -= r[j] * g[i];
      }
      g = std::move(next);
    }
    if (std::all_of(g.begin(), g.end(), [&](const oracle::cld& c) { return in_ring(c, D); })) return true;
  }
  return false;
}

bool acceptable_roots(const std::vector<oracle::cld>& r, long D, bool totally_real) {
  for (size_t i = 0; i < r.size(); ++i) {
    if (std::abs(r[i]) < 1e-3L || in_ring(r[i], D)) return false;
    if (totally_real && std::fabs(r[i].imag()) > 1e-9L) return false;
    for (size_t j = 0; j < i; ++j) {
      if (std::abs(r[i] - r[j]) < 1e-3L) return false;
    }
  }
  return true;
}

}  // namespace

oracle::Problem random_problem(std::mt19937_64& rng, const Shape& s) {
  oracle::Problem p;
  p.D = s.D;
  p.k = s.k;
  for (;;) {
    p.f.assign(static_cast<size_t>(s.n + 1), 0);
    p.f.back() = 1;
    for (int i = 0; i < s.n; ++i) p.f[static_cast<size_t>(i)] = uniform(rng, -5, 5);
    if (p.f[0] == 0) continue;
    const auto r = oracle::roots(p.f);
    if (acceptable_roots(r, s.D, s.totally_real) && !reducible(r, s.D)) break;
  }
  const int hdeg = static_cast<int>(uniform(rng, 0, 2));
  p.h.assign(static_cast<size_t>(hdeg + 1), {0, 0});
  for (auto& c : p.h) {
    c[0] = uniform(rng, -2, 2);
    if (s.lambda_imag) c[1] = uniform(rng, -2, 2);
  }
  p.c0_squared = mpq_class(uniform(rng, 1, s.max_c0));
  p.c0_squared *= p.c0_squared;
  return p;
}

relthue::ProblemInstance to_instance(const oracle::Problem& p, const mpq_class& Z0) {
  using namespace relthue;
  auto M = std::make_shared<const GroundField>(p.D == 0 ? GroundField::rational() : GroundField::quadratic(p.D));
  const size_t m = static_cast<size_t>(M->degree());
  std::vector<Coords> f, h;
  for (long c : p.f) {
    Coords x(m, 0);
    x[0] = c;
    f.push_back(x);
  }
  for (const auto& c : p.h) {
    Coords x(m, 0);
    x[0] = c[0];
    if (m == 2) x[1] = c[1];
    h.push_back(x);
  }
  return ProblemInstance::from_polynomials(FieldPoly(M, f), FieldPoly(M, h), Rhs{p.c0_squared, p.k}, Z0);
}

std::vector<oracle::Pair> pairs(const relthue::enumeration::SolutionSet& s) {
  std::vector<oracle::Pair> out;
  for (const auto& c : s.solutions) {
    oracle::Pair q;
    for (size_t t = 0; t < c.x.size(); ++t) {
      q.x[t] = c.x[t].get_si();
      q.y[t] = c.y[t].get_si();
    }
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const oracle::Problem& p) {
  std::ostringstream os;
  os << "D=" << p.D << " f=[";
  for (long c : p.f) os << c << ' ';
  os << "] h=[";
  for (const auto& c : p.h) os << c[0] << (c[1] ? "+" + std::to_string(c[1]) + "w" : "") << ' ';
  os << "] c0^2=" << p.c0_squared.get_str() << " k=" << p.k;
  return os.str();
}

}  // namespace miniature
