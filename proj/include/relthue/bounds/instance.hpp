#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "relthue/field/field_poly.hpp"
#include "relthue/numeric/roots.hpp"

namespace relthue {

using field::Coords;
using field::FieldPoly;
using field::FieldPtr;
using field::GroundField;
using numeric::Ball;
using numeric::CBall;
using numeric::Precision;
using numeric::Real;

/// Exact description of the factors: alpha_j run over the roots of the monic
/// f in Z_M[t] and lambda_j = h(alpha_j) with h in Z_M[t].
struct ExactForm {
  FieldPoly f;
  FieldPoly h;
};

/// Right-hand side c0 * Z^k. c0 is stored through its square so that values
/// such as 25/sqrt(2)^5 stay exact.
struct Rhs {
  mpq_class c0_squared = 1;
  int k = 0;

  static Rhs from_c0(const mpq_class& c0, int k) { return Rhs{c0 * c0, k}; }
  Ball c0(Precision prec) const;
};

/// alpha_j and lambda_j at any requested number of decimal digits.
class ConjugateSource {
 public:
  virtual ~ConjugateSource() = default;
  virtual int size() const = 0;
  virtual std::vector<CBall> alphas(int digits) const = 0;
  virtual std::vector<CBall> lambdas(int digits) const = 0;
  virtual bool alpha_real(int j) const = 0;
  virtual bool lambda_real(int j) const = 0;
  virtual const ExactForm* exact() const { return nullptr; }
};

/// Roots of f (certified, refined lazily) and lambda_j = h(alpha_j).
class PolynomialSource final : public ConjugateSource {
 public:
  PolynomialSource(FieldPoly f, FieldPoly h, int initial_digits = 60);

  int size() const override { return n_; }
  std::vector<CBall> alphas(int digits) const override;
  std::vector<CBall> lambdas(int digits) const override;
  bool alpha_real(int j) const override { return alpha_real_[static_cast<size_t>(j)]; }
  bool lambda_real(int j) const override { return lambda_real_[static_cast<size_t>(j)]; }
  const ExactForm* exact() const override { return &form_; }

 private:
  const numeric::RootSet& roots_at(int digits) const;

  ExactForm form_;
  int n_ = 0;
  std::vector<bool> alpha_real_, lambda_real_;
  mutable std::mutex mutex_;
  mutable numeric::RootSet roots_;
};

/// Conjugates supplied as numbers. Requests above the stored accuracy
/// return the stored balls; callers detect the shortfall from the radii.
class FixedSource final : public ConjugateSource {
 public:
  FixedSource(std::vector<CBall> alphas, std::vector<CBall> lambdas);

  int size() const override { return static_cast<int>(alphas_.size()); }
  std::vector<CBall> alphas(int digits) const override;
  std::vector<CBall> lambdas(int digits) const override;
  bool alpha_real(int j) const override { return alphas_[static_cast<size_t>(j)].certainly_real(); }
  bool lambda_real(int j) const override { return lambdas_[static_cast<size_t>(j)].certainly_real(); }

 private:
  std::vector<CBall> alphas_, lambdas_;
};

/// |prod_j (X - alpha_j Y + lambda_j)| <= c0 Z^k with X, Y in Z_M and
/// Z = max(size X, size Y) <= Z0.
class ProblemInstance {
 public:
  ProblemInstance(FieldPtr field, std::shared_ptr<const ConjugateSource> source, Rhs rhs, mpq_class Z0);
  static ProblemInstance from_polynomials(FieldPoly f, FieldPoly h, Rhs rhs, mpq_class Z0);

  int n() const { return source_->size(); }
  int m() const { return field_->degree(); }
  const GroundField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const ConjugateSource& source() const { return *source_; }
  const std::shared_ptr<const ConjugateSource>& source_ptr() const { return source_; }
  const ExactForm* exact() const { return source_->exact(); }

  std::vector<CBall> alphas(int digits) const { return source_->alphas(digits); }
  std::vector<CBall> lambdas(int digits) const { return source_->lambdas(digits); }

  const Rhs& rhs() const { return rhs_; }
  int k() const { return rhs_.k; }
  const mpq_class& Z0() const { return Z0_; }
  /// Certified upper bound for max_j |lambda_j|.
  const Real& c_lambda() const { return c_lambda_; }
  /// Every lambda_j is exactly zero.
  bool homogeneous() const { return c_lambda_.is_zero(); }
  /// n > 2m + k + 1: the reduction can contract the bound.
  bool reducible() const { return n() > 2 * m() + k() + 1; }
  /// A0 = c7 Z0 (integer part).
  mpz_class A0() const { return field_->size_to_coord_bound(Z0_); }

  /// Every alpha_j and lambda_j real and the basis real in the first embedding.
  bool totally_real() const;

  std::string describe() const;

 private:
  FieldPtr field_;
  std::shared_ptr<const ConjugateSource> source_;
  Rhs rhs_;
  mpq_class Z0_;
  Real c_lambda_{64};
};

}  // namespace relthue
