#pragma once

#include <memory>
#include <string>
#include <vector>

#include "relthue/field/ground_field.hpp"
#include "relthue/numeric/polynomial.hpp"

namespace relthue::field {

using FieldPtr = std::shared_ptr<const GroundField>;

/// Polynomial with coefficients in Z_M, each coefficient given by its
/// coordinates in the integral basis. Ascending order.
class FieldPoly {
 public:
  FieldPoly() = default;
  FieldPoly(FieldPtr field, std::vector<Coords> ascending);
  /// Integer polynomial viewed over Z_M.
  static FieldPoly from_integers(FieldPtr field, const numeric::PolyZ& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coords>& coefficients() const { return coeffs_; }
  const GroundField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  bool is_monic() const;
  /// Every coefficient lies in Z (only the first coordinate is nonzero).
  bool is_rational() const;
  /// The polynomial formed by coordinate `k` of every coefficient.
  numeric::PolyZ coordinate(size_t k) const;

  /// Coefficients embedded by the first conjugate of M, on demand.
  std::shared_ptr<const numeric::PolySpec> spec() const;
  numeric::CBall operator()(const numeric::CBall& x) const;

  /// Exact for Q and quadratic fields (discriminant via a Sylvester
  /// determinant), numeric root separation otherwise.
  bool is_squarefree() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Coords> coeffs_;
};

}  // namespace relthue::field
