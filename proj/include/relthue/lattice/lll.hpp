#pragma once

#include <gmpxx.h>

#include <vector>

namespace relthue::lattice {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

struct LllResult {
  /// Reduced basis, one vector per entry.
  IntMatrix basis;
  /// Unimodular U with basis = U * input (rows are coefficient vectors).
  IntMatrix transform;
  long swaps = 0;
};

/// Integral LLL (Cohen, Algorithm 2.6.7) on linearly independent integer
/// vectors, 1/4 < delta < 1. All arithmetic is exact. The first vector then
/// satisfies ||b1||^2 <= (1/(delta - 1/4))^(dim-1) ||v||^2 for every nonzero
/// lattice vector v.
LllResult lll_reduce(IntMatrix basis, const mpq_class& delta = mpq_class(3, 4));

mpz_class dot(const IntVector& a, const IntVector& b);
inline mpz_class norm2(const IntVector& a) { return dot(a, a); }
/// det(B B^T), the squared covolume.
mpz_class gram_determinant(const IntMatrix& basis);
/// Checks the size-reduction and Lovasz conditions exactly.
bool is_lll_reduced(const IntMatrix& basis, const mpq_class& delta = mpq_class(3, 4));

}  // namespace relthue::lattice
