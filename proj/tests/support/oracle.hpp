#pragma once

// Brute-force reference for small instances. Shares no code with the
// library's enumeration or verification: conjugates come from its own
// long double root finder and close calls go to an exact Sylvester
// determinant over Q(w).

#include <gmpxx.h>

#include <array>
#include <complex>
#include <vector>

namespace oracle {

using cld = std::complex<long double>;

/// f in Z[t] (ascending, monic) over M = Q or Q(sqrt D) with the standard
/// basis; lambda_j = h(alpha_j), h in Z_M[t] with coefficients (a, b) = a + b w.
struct Problem {
  long D = 0;  // 0 for Q
  std::vector<long> f;
  std::vector<std::array<long, 2>> h;
  mpq_class c0_squared = 1;
  int k = 0;

  int m() const { return D == 0 ? 1 : 2; }
  int n() const { return static_cast<int>(f.size()) - 1; }
};

struct Pair {
  std::array<long, 2> x{0, 0}, y{0, 0};
  friend bool operator<(const Pair& a, const Pair& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
  friend bool operator==(const Pair& a, const Pair& b) = default;
};

/// Roots of a monic integer polynomial (Durand-Kerner, long double).
std::vector<cld> roots(const std::vector<long>& f);
/// w in the first embedding.
cld omega(long D);

/// |prod (X - alpha_j Y + lambda_j)| in long double.
long double product_abs(const Problem& p, const std::vector<cld>& alpha, const std::vector<cld>& lambda,
                        const Pair& s);
/// max over both embeddings of |X| and |Y|.
long double size(const Problem& p, const Pair& s);

/// Exact decision of |prod| <= c0 Z^k (imaginary quadratic or Q only).
bool exact_solution(const Problem& p, const Pair& s);

/// All solutions with every coordinate <= box.
std::vector<Pair> brute_force(const Problem& p, long box);

}  // namespace oracle
