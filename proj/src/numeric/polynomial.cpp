#include "relthue/numeric/polynomial.hpp"

#include <sstream>

#include "relthue/errors.hpp"

namespace relthue::numeric {

PolyZ::PolyZ(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

PolyZ PolyZ::from_descending(const std::vector<mpz_class>& coeffs) {
  return PolyZ(std::vector<mpz_class>(coeffs.rbegin(), coeffs.rend()));
}

PolyZ PolyZ::from_descending(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> v;
  for (long c : coeffs) v.emplace_back(c);
  return from_descending(v);
}

void PolyZ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyZ PolyZ::derivative() const {
  std::vector<mpz_class> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return PolyZ(std::move(d));
}

namespace {

using PolyQ = std::vector<mpq_class>;

void trim_q(PolyQ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

PolyQ rem_q(PolyQ a, const PolyQ& b) {
  while (a.size() >= b.size()) {
    mpq_class f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim_q(a);
  }
  return a;
}

}  // namespace

bool PolyZ::is_squarefree() const {
  if (degree() < 1) return true;
  PolyQ a(coeffs_.begin(), coeffs_.end());
  PolyZ dz = derivative();
  PolyQ b(dz.coeffs_.begin(), dz.coeffs_.end());
  while (!b.empty()) {
    PolyQ r = rem_q(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

mpz_class PolyZ::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CBall PolyZ::operator()(const CBall& x) const {
  std::vector<CBall> c;
  for (const auto& a : coeffs_) c.push_back(CBall::from_mpz(a, x.precision()));
  return evaluate(c, x);
}

std::string PolyZ::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::shared_ptr<const PolySpec> PolySpec::from(const PolyZ& p) {
  auto spec = std::make_shared<PolySpec>();
  spec->degree = p.degree();
  spec->real_coefficients = true;
  spec->coefficients = [p](Precision prec) {
    std::vector<CBall> c;
    c.reserve(p.coefficients().size());
    for (const auto& a : p.coefficients()) c.push_back(CBall::from_mpz(a, prec));
    return c;
  };
  return spec;
}

void evaluate_with_derivative(const std::vector<CBall>& coeffs, const CBall& x, CBall& value,
                              CBall& derivative) {
  value = CBall(x.precision());
  derivative = CBall(x.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    derivative = derivative * x + value;
    value = value * x + *it;
  }
}

CBall evaluate(const std::vector<CBall>& coeffs, const CBall& x) {
  CBall value(x.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * x + *it;
  return value;
}

}  // namespace relthue::numeric
