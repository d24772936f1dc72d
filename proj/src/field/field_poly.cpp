#include "relthue/field/field_poly.hpp"

#include <sstream>

#include "relthue/errors.hpp"
#include "relthue/field/exact.hpp"
#include "relthue/numeric/roots.hpp"

namespace relthue::field {

FieldPoly::FieldPoly(FieldPtr field, std::vector<Coords> ascending)
    : field_(std::move(field)), coeffs_(std::move(ascending)) {
  if (!field_) throw InvalidInput("polynomial needs a ground field");
  for (const auto& c : coeffs_) {
    if (static_cast<int>(c.size()) != field_->degree()) {
      throw InvalidInput("coefficient has " + std::to_string(c.size()) + " coordinates, field degree is " +
                         std::to_string(field_->degree()));
    }
  }
  trim();
}

FieldPoly FieldPoly::from_integers(FieldPtr field, const numeric::PolyZ& p) {
  std::vector<Coords> c;
  const size_t m = static_cast<size_t>(field->degree());
  for (const auto& a : p.coefficients()) {
    Coords x(m, 0);
    x[0] = a;
    c.push_back(std::move(x));
  }
  return FieldPoly(std::move(field), std::move(c));
}

void FieldPoly::trim() {
  auto zero = [](const Coords& c) {
    for (const auto& v : c) {
      if (v != 0) return false;
    }
    return true;
  };
  while (!coeffs_.empty() && zero(coeffs_.back())) coeffs_.pop_back();
}

bool FieldPoly::is_monic() const {
  if (coeffs_.empty()) return false;
  const Coords& lc = coeffs_.back();
  if (lc[0] != 1) return false;
  for (size_t k = 1; k < lc.size(); ++k) {
    if (lc[k] != 0) return false;
  }
  return true;
}

bool FieldPoly::is_rational() const {
  for (const auto& c : coeffs_) {
    for (size_t k = 1; k < c.size(); ++k) {
      if (c[k] != 0) return false;
    }
  }
  return true;
}

numeric::PolyZ FieldPoly::coordinate(size_t k) const {
  std::vector<mpz_class> v;
  for (const auto& c : coeffs_) v.push_back(c[k]);
  return numeric::PolyZ(std::move(v));
}

std::shared_ptr<const numeric::PolySpec> FieldPoly::spec() const {
  auto s = std::make_shared<numeric::PolySpec>();
  s->degree = degree();
  s->real_coefficients = field_->real_basis() || is_rational();
  FieldPtr field = field_;
  std::vector<Coords> coeffs = coeffs_;
  s->coefficients = [field, coeffs](numeric::Precision prec) {
    std::vector<numeric::CBall> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(field->embed(c, prec));
    return out;
  };
  return s;
}

numeric::CBall FieldPoly::operator()(const numeric::CBall& x) const {
  return numeric::evaluate(spec()->coefficients(x.precision()), x);
}

bool FieldPoly::is_squarefree() const {
  if (degree() < 1) return true;
  if (is_rational()) return coordinate(0).is_squarefree();
  if (const auto& ring = field_->quadratic_ring()) {
    std::vector<QuadInt> p, dp;
    for (const auto& c : coeffs_) p.emplace_back(c[0], c[1], *ring);
    for (size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * mpz_class(static_cast<long>(i)));
    if (degree() == 1) return true;
    return !sylvester_resultant(p, dp).is_zero();
  }
  try {
    numeric::find_roots(spec(), 30);
    return true;
  } catch (const PrecisionExhausted&) {
    return false;
  }
}

std::string FieldPoly::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Coords& c = coeffs_[static_cast<size_t>(i)];
    bool zero = true;
    for (const auto& v : c) zero = zero && v == 0;
    if (zero) continue;
    if (!first) os << " + ";
    os << "(" << field_->element_to_string(c) << ")";
    if (i > 0) os << "*" << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace relthue::field
