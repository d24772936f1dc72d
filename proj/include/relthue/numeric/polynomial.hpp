#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "relthue/numeric/complex_ball.hpp"

namespace relthue::numeric {

/// Univariate polynomial with exact integer coefficients, stored in
/// ascending order (coefficient i multiplies x^i).
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<mpz_class> ascending);
  /// Leading coefficient first, as polynomials are usually written.
  static PolyZ from_descending(const std::vector<mpz_class>& coeffs);
  static PolyZ from_descending(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  const mpz_class& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  PolyZ derivative() const;
  /// gcd(p, p') is constant, decided over Q.
  bool is_squarefree() const;

  mpz_class operator()(const mpz_class& x) const;
  CBall operator()(const CBall& x) const;

  std::string to_string(const std::string& var = "x") const;
  friend bool operator==(const PolyZ&, const PolyZ&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Polynomial with complex coefficients that can be produced at any
/// requested precision. This is what the root finder consumes.
struct PolySpec {
  int degree = 0;
  bool real_coefficients = true;
  std::function<std::vector<CBall>(Precision)> coefficients;

  static std::shared_ptr<const PolySpec> from(const PolyZ& p);
};

/// Horner evaluation of value and derivative.
void evaluate_with_derivative(const std::vector<CBall>& coeffs, const CBall& x, CBall& value,
                              CBall& derivative);
CBall evaluate(const std::vector<CBall>& coeffs, const CBall& x);

}  // namespace relthue::numeric
