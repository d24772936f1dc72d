#include "relthue/lattice/lll.hpp"

#include <utility>

#include "relthue/errors.hpp"
#include "relthue/field/exact.hpp"

namespace relthue::lattice {

mpz_class dot(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

mpz_class gram_determinant(const IntMatrix& basis) {
  const size_t n = basis.size();
  std::vector<std::vector<mpz_class>> g(n, std::vector<mpz_class>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) g[i][j] = dot(basis[i], basis[j]);
  }
  return field::det_bareiss(std::move(g));
}

namespace {

mpz_class div_exact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// round(a / b) for b > 0.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class num = 2 * a + b, q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), mpz_class(2 * b).get_mpz_t());
  return q;
}

class IntegralLll {
 public:
  IntegralLll(IntMatrix basis, const mpq_class& delta)
      : b_(std::move(basis)), n_(b_.size()), dnum_(delta.get_num()), dden_(delta.get_den()) {
    if (!(delta > mpq_class(1, 4) && delta < 1)) throw InvalidInput("LLL delta must lie in (1/4, 1)");
    h_.assign(n_, IntVector(n_, 0));
    for (size_t i = 0; i < n_; ++i) h_[i][i] = 1;
    d_.assign(n_ + 1, 0);
    lam_.assign(n_, IntVector(n_, 0));
  }

  LllResult run() {
    LllResult out;
    if (n_ == 0) return out;
    d_[0] = 1;
    d_[1] = norm2(b_[0]);
    if (d_[1] == 0) throw InvalidInput("LLL input vectors are linearly dependent");
    size_t k = 1, kmax = 0;  // zero-based index of the current vector
    while (k < n_) {
      if (k > kmax) {
        kmax = k;
        for (size_t j = 0; j <= k; ++j) {
          mpz_class u = dot(b_[k], b_[j]);
          for (size_t i = 0; i < j; ++i) u = div_exact(d_[i + 1] * u - lam_[k][i] * lam_[j][i], d_[i]);
          if (j < k) {
            lam_[k][j] = u;
          } else {
            if (u == 0) throw InvalidInput("LLL input vectors are linearly dependent");
            d_[k + 1] = u;
          }
        }
      }
      reduce(k, k - 1);
      // Lovasz, scaled by the denominator of delta: swap when
      // d_k d_{k-2} < delta d_{k-1}^2 - lambda^2.
      mpz_class lhs = dden_ * d_[k + 1] * d_[k - 1];
      mpz_class rhs = dnum_ * d_[k] * d_[k] - dden_ * lam_[k][k - 1] * lam_[k][k - 1];
      if (lhs < rhs) {
        swap(k, kmax);
        ++out.swaps;
        if (k > 1) --k;
      } else {
        for (size_t l = k - 1; l-- > 0;) reduce(k, l);
        ++k;
      }
    }
    out.basis = std::move(b_);
    out.transform = std::move(h_);
    return out;
  }

 private:
  void reduce(size_t k, size_t l) {
    mpz_class twice = 2 * abs(lam_[k][l]);
    if (twice <= d_[l + 1]) return;
    mpz_class q = round_div(lam_[k][l], d_[l + 1]);
    for (size_t c = 0; c < b_[k].size(); ++c) mpz_submul(b_[k][c].get_mpz_t(), q.get_mpz_t(), b_[l][c].get_mpz_t());
    for (size_t c = 0; c < n_; ++c) mpz_submul(h_[k][c].get_mpz_t(), q.get_mpz_t(), h_[l][c].get_mpz_t());
    lam_[k][l] -= q * d_[l + 1];
    for (size_t i = 0; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swap(size_t k, size_t kmax) {
    std::swap(b_[k], b_[k - 1]);
    std::swap(h_[k], h_[k - 1]);
    for (size_t j = 0; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    mpz_class lam = lam_[k][k - 1];
    mpz_class B = div_exact(d_[k - 1] * d_[k + 1] + lam * lam, d_[k]);
    for (size_t i = k + 1; i <= kmax; ++i) {
      mpz_class t = lam_[i][k];
      lam_[i][k] = div_exact(d_[k + 1] * lam_[i][k - 1] - lam * t, d_[k]);
      lam_[i][k - 1] = div_exact(B * t + lam * lam_[i][k], d_[k + 1]);
    }
    d_[k] = B;
  }

  IntMatrix b_;
  size_t n_;
  IntMatrix h_;
  IntVector d_;  // d_[i] = Gram determinant of the first i vectors
  IntMatrix lam_;
  mpz_class dnum_, dden_;
};

}  // namespace

LllResult lll_reduce(IntMatrix basis, const mpq_class& delta) { return IntegralLll(std::move(basis), delta).run(); }

bool is_lll_reduced(const IntMatrix& basis, const mpq_class& delta) {
  const size_t n = basis.size();
  if (n == 0) return true;
  // Exact Gram-Schmidt over Q.
  std::vector<std::vector<mpq_class>> bstar(n);
  std::vector<mpq_class> bnorm(n);
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i) {
    bstar[i].assign(basis[i].begin(), basis[i].end());
    for (size_t j = 0; j < i; ++j) {
      mpq_class num = 0;
      for (size_t c = 0; c < basis[i].size(); ++c) num += mpq_class(basis[i][c]) * bstar[j][c];
      mu[i][j] = num / bnorm[j];
      for (size_t c = 0; c < basis[i].size(); ++c) bstar[i][c] -= mu[i][j] * bstar[j][c];
    }
    bnorm[i] = 0;
    for (const auto& v : bstar[i]) bnorm[i] += v * v;
    if (bnorm[i] == 0) return false;
  }
  const mpq_class half(1, 2);
  for (size_t i = 1; i < n; ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (abs(mu[i][j]) > half) return false;
    }
    if (bnorm[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * bnorm[i - 1]) return false;
  }
  return true;
}

}  // namespace relthue::lattice
