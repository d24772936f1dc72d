#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "relthue/field/quadratic.hpp"
#include "relthue/numeric/complex_ball.hpp"

namespace relthue::field {

using numeric::Ball;
using numeric::CBall;
using numeric::Precision;
using numeric::Real;

/// Integer coordinates (x_1, ..., x_m) of X = x_1 + x_2 w_2 + ... + x_m w_m.
using Coords = std::vector<mpz_class>;

using ComplexMatrix = std::vector<std::vector<CBall>>;

enum class FieldKind { Rational, RealQuadratic, ImaginaryQuadratic, Explicit };

/// The ground field M with a fixed integral basis (w_1 = 1, w_2, ..., w_m).
/// Row j of the conjugate matrix S holds the j-th embedding of the basis;
/// row 0 is the embedding in which the inequality is posed.
class GroundField {
 public:
  static GroundField rational();
  /// Q(sqrt(D)) for squarefree D (negative for imaginary fields).
  static GroundField quadratic(long D);
  static GroundField real_quadratic(long D) { return quadratic(D); }
  static GroundField imaginary_quadratic(long d) { return quadratic(-d); }
  /// Explicit conjugate matrix, fixed precision. Throws SingularBasis.
  static GroundField from_conjugates(ComplexMatrix S);

  int degree() const { return m_; }
  FieldKind kind() const { return kind_; }
  const std::optional<QuadraticRing>& quadratic_ring() const { return ring_; }
  /// Basis values in embedding 0 are all real.
  bool real_basis() const { return real_basis_; }

  /// Conjugate matrix S at (at least) the requested precision.
  ComplexMatrix conjugate_matrix(Precision prec) const;
  const ComplexMatrix& inverse_matrix() const { return s_inv_; }
  /// Basis w_1..w_m in embedding 0.
  std::vector<CBall> basis(Precision prec) const;

  /// Row norm of S (upper bound).
  const Real& c6() const { return c6_; }
  /// Row norm of S^{-1} (upper bound).
  const Real& c7() const { return c7_; }

  CBall embed(const Coords& x, Precision prec) const;
  /// S * x: all m conjugates.
  std::vector<CBall> conjugates(const Coords& x, Precision prec) const;
  /// max_j |X^{(j)}|.
  Ball house(const Coords& x, Precision prec) const;

  /// A0 = c7 * Z0, as the largest integer not above the certified bound.
  mpz_class size_to_coord_bound(const mpq_class& Z0) const;

  std::string describe() const;
  std::string element_to_string(const Coords& x) const;

 private:
  GroundField() = default;
  void finish();

  int m_ = 1;
  FieldKind kind_ = FieldKind::Rational;
  std::optional<QuadraticRing> ring_;
  ComplexMatrix explicit_s_;
  ComplexMatrix s_inv_;
  Real c6_{64}, c7_{64};
  bool real_basis_ = true;
};

/// Inverse by Gaussian elimination with ball pivots; throws SingularBasis if
/// a pivot cannot be separated from zero.
ComplexMatrix invert(const ComplexMatrix& a);
/// Max over rows of the sum of absolute values (upper bound).
Real row_norm(const ComplexMatrix& a);

}  // namespace relthue::field
