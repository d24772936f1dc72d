#include "relthue/field/ground_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relthue/errors.hpp"

namespace relthue::field {

namespace {
constexpr Precision kSetupBits = 256;
}

GroundField GroundField::rational() {
  GroundField f;
  f.m_ = 1;
  f.kind_ = FieldKind::Rational;
  f.finish();
  return f;
}

GroundField GroundField::quadratic(long D) {
  GroundField f;
  f.m_ = 2;
  f.ring_ = QuadraticRing::for_radicand(D);
  f.kind_ = D > 0 ? FieldKind::RealQuadratic : FieldKind::ImaginaryQuadratic;
  f.real_basis_ = D > 0;
  f.finish();
  return f;
}

GroundField GroundField::from_conjugates(ComplexMatrix S) {
  const size_t m = S.size();
  if (m == 0) throw InvalidInput("empty conjugate matrix");
  for (const auto& row : S) {
    if (row.size() != m) throw InvalidInput("conjugate matrix must be square");
    const CBall& first = row.front();
    if (!first.re().contains(Real(1, 64)) || !first.im().contains(Real(0, 64))) {
      throw InvalidInput("first basis element must be 1 (first column of ones)");
    }
  }
  GroundField f;
  f.m_ = static_cast<int>(m);
  f.kind_ = FieldKind::Explicit;
  f.real_basis_ = std::all_of(S.front().begin(), S.front().end(),
                              [](const CBall& z) { return z.certainly_real(); });
  f.explicit_s_ = std::move(S);
  f.finish();
  return f;
}

void GroundField::finish() {
  ComplexMatrix S = conjugate_matrix(kSetupBits);
  s_inv_ = invert(S);
  c6_ = row_norm(S);
  c7_ = row_norm(s_inv_);
  // For w = sqrt(D) the inverse is [[1/2, 1/2], [1/(2w), -1/(2w)]], whose row
  // norm is max(1, 1/sqrt|D|) = 1 exactly. Keeping it exact makes A0 = Z0.
  if (m_ == 1 || (ring_ && ring_->T == 0)) c7_ = Real(1, 64);
}

ComplexMatrix GroundField::conjugate_matrix(Precision prec) const {
  switch (kind_) {
    case FieldKind::Rational:
      return {{CBall::exact(1, prec)}};
    case FieldKind::RealQuadratic:
    case FieldKind::ImaginaryQuadratic: {
      const QuadraticRing& r = *ring_;
      Ball s = numeric::sqrt(Ball::exact(std::labs(r.D), prec));
      CBall root = r.D > 0 ? CBall(s) : CBall(Ball(prec), s);
      CBall w1 = root, w2 = -root;
      if (r.T == 1) {
        CBall half(Ball::from_mpq(mpq_class(1, 2), prec));
        CBall one = CBall::exact(1, prec);
        w1 = (one + root) * half;
        w2 = (one - root) * half;
      }
      return {{CBall::exact(1, prec), w1}, {CBall::exact(1, prec), w2}};
    }
    case FieldKind::Explicit:
      return explicit_s_;
  }
  return {};
}

std::vector<CBall> GroundField::basis(Precision prec) const { return conjugate_matrix(prec).front(); }

CBall GroundField::embed(const Coords& x, Precision prec) const {
  if (static_cast<int>(x.size()) != m_) throw InvalidInput("coordinate vector has wrong length");
  std::vector<CBall> w = basis(prec);
  CBall acc(prec);
  for (int k = 0; k < m_; ++k) {
    if (x[static_cast<size_t>(k)] == 0) continue;
    acc += w[static_cast<size_t>(k)] * CBall::from_mpz(x[static_cast<size_t>(k)], prec);
  }
  return acc;
}

std::vector<CBall> GroundField::conjugates(const Coords& x, Precision prec) const {
  if (static_cast<int>(x.size()) != m_) throw InvalidInput("coordinate vector has wrong length");
  ComplexMatrix S = conjugate_matrix(prec);
  std::vector<CBall> out;
  for (const auto& row : S) {
    CBall acc(prec);
    for (int k = 0; k < m_; ++k) {
      if (x[static_cast<size_t>(k)] == 0) continue;
      acc += row[static_cast<size_t>(k)] * CBall::from_mpz(x[static_cast<size_t>(k)], prec);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

Ball GroundField::house(const Coords& x, Precision prec) const {
  std::vector<CBall> c = conjugates(x, prec);
  Ball best = abs(c.front());
  for (size_t j = 1; j < c.size(); ++j) best = numeric::max(best, abs(c[j]));
  return best;
}

mpz_class GroundField::size_to_coord_bound(const mpq_class& Z0) const {
  if (Z0 < 0) throw InvalidInput("Z0 must be nonnegative");
  if (Z0 == 0) return 0;
  double log2z = std::log2(Z0.get_d());
  Precision prec = static_cast<Precision>(std::max(256.0, std::isfinite(log2z) ? log2z + 128 : 4096));
  Real z = Real::from_mpq(Z0, prec, MPFR_RNDU);
  Real bound = numeric::mul(c7_, z, prec, MPFR_RNDU);
  return bound.floor();
}

std::string GroundField::describe() const {
  switch (kind_) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::RealQuadratic:
    case FieldKind::ImaginaryQuadratic:
      return "Q(sqrt(" + std::to_string(ring_->D) + "))";
    case FieldKind::Explicit:
      return "explicit field of degree " + std::to_string(m_);
  }
  return "?";
}

std::string GroundField::element_to_string(const Coords& x) const {
  if (m_ == 1) return x.front().get_str();
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < m_; ++k) {
    const mpz_class& c = x[static_cast<size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpz_class a = abs(c);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "w" << (m_ > 2 ? std::to_string(k + 1) : "");
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ComplexMatrix invert(const ComplexMatrix& a) {
  const size_t n = a.size();
  if (n == 0) return {};
  const Precision prec = a.front().front().precision();
  ComplexMatrix m = a;
  ComplexMatrix inv(n, std::vector<CBall>(n, CBall(prec)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = CBall::exact(1, prec);

  for (size_t col = 0; col < n; ++col) {
    size_t pivot = n;
    Real best(64);
    for (size_t r = col; r < n; ++r) {
      Ball mag = numeric::abs(m[r][col]);
      if (mag.positive() && (pivot == n || best < mag.lower())) {
        pivot = r;
        best = mag.lower();
      }
    }
    if (pivot == n) throw SingularBasis("conjugate matrix pivot cannot be separated from zero");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    CBall p = m[col][col];
    for (size_t k = 0; k < n; ++k) {
      m[col][k] /= p;
      inv[col][k] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      CBall f = m[r][col];
      if (f.contains_zero() && f.radius().is_zero()) continue;
      for (size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

Real row_norm(const ComplexMatrix& a) {
  Real best(64);
  for (const auto& row : a) {
    Real sum(64);
    for (const auto& z : row) sum = numeric::add(sum, numeric::abs(z).upper(), 64, MPFR_RNDU);
    if (best < sum) best = sum;
  }
  return best;
}

}  // namespace relthue::field
