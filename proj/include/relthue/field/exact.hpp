#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "relthue/field/quadratic.hpp"

namespace relthue::field {

inline mpz_class zero_like(const mpz_class&) { return 0; }
inline mpz_class one_like(const mpz_class&) { return 1; }
inline QuadInt zero_like(const QuadInt& x) { return x.zero(); }
inline QuadInt one_like(const QuadInt& x) { return x.one(); }

/// Determinant by fraction-free Gaussian elimination (Bareiss). Every
/// division is exact in an integral domain, so R only needs exact_div.
template <class R>
R det_bareiss(std::vector<std::vector<R>> a) {
  const size_t n = a.size();
  if (n == 0) return R();
  R prev = one_like(a[0][0]);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      size_t r = k + 1;
      while (r < n && is_zero(a[r][k])) ++r;
      if (r == n) return zero_like(a[0][0]);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  R d = a[n - 1][n - 1];
  return negate ? -d : d;
}

/// Reduces p modulo the monic polynomial f (both ascending).
template <class R>
std::vector<R> reduce_mod_monic(std::vector<R> p, const std::vector<R>& f) {
  const size_t n = f.size() - 1;
  while (p.size() > n) {
    R lead = p.back();
    size_t shift = p.size() - 1 - n;
    if (!is_zero(lead)) {
      for (size_t i = 0; i < n; ++i) p[i + shift] -= lead * f[i];
    }
    p.pop_back();
  }
  while (p.size() < n) p.push_back(zero_like(f[0]));
  return p;
}

/// prod_j p(alpha_j) over the roots of the monic f: the determinant of
/// multiplication by p on R[t]/(f).
template <class R>
R multiplication_det(const std::vector<R>& f, const std::vector<R>& p) {
  const size_t n = f.size() - 1;
  std::vector<std::vector<R>> m(n, std::vector<R>(n, zero_like(f[0])));
  std::vector<R> col = reduce_mod_monic(p, f);
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) m[i][j] = col[i];
    // col <- t * col mod f
    std::vector<R> shifted(n + 1, zero_like(f[0]));
    for (size_t i = 0; i < n; ++i) shifted[i + 1] = col[i];
    col = reduce_mod_monic(std::move(shifted), f);
  }
  return det_bareiss(std::move(m));
}

/// Resultant of a and b (ascending, nonzero leading terms) as the Sylvester
/// determinant.
template <class R>
R sylvester_resultant(const std::vector<R>& a, const std::vector<R>& b) {
  const size_t da = a.size() - 1, db = b.size() - 1, n = da + db;
  std::vector<std::vector<R>> s(n, std::vector<R>(n, zero_like(a[0])));
  for (size_t r = 0; r < db; ++r) {
    for (size_t i = 0; i <= da; ++i) s[r][r + i] = a[da - i];
  }
  for (size_t r = 0; r < da; ++r) {
    for (size_t i = 0; i <= db; ++i) s[db + r][r + i] = b[db - i];
  }
  return det_bareiss(std::move(s));
}

}  // namespace relthue::field
