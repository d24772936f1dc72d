#include "relthue/bounds/instance.hpp"

#include <sstream>

#include "relthue/errors.hpp"

namespace relthue {

Ball Rhs::c0(Precision prec) const { return numeric::sqrt(Ball::from_mpq(c0_squared, prec)); }

PolynomialSource::PolynomialSource(FieldPoly f, FieldPoly h, int initial_digits)
    : form_{std::move(f), std::move(h)} {
  if (form_.f.degree() < 1) throw InvalidInput("alpha polynomial must have degree >= 1");
  if (!form_.f.is_squarefree()) throw NotSquarefree(form_.f.to_string() + " has a repeated root");
  n_ = form_.f.degree();
  roots_ = numeric::find_roots(form_.f.spec(), initial_digits);
  const bool h_real = form_.h.field().real_basis() || form_.h.is_rational();
  for (const auto& r : roots_.roots()) {
    alpha_real_.push_back(r.real);
    lambda_real_.push_back(r.real && h_real);
  }
}

const numeric::RootSet& PolynomialSource::roots_at(int digits) const {
  if (roots_.digits() < digits) roots_ = roots_.refined(digits);
  return roots_;
}

std::vector<CBall> PolynomialSource::alphas(int digits) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const numeric::RootSet& rs = roots_at(digits);
  const Precision prec = numeric::bits_for_digits(digits);
  std::vector<CBall> out;
  for (const auto& r : rs.roots()) out.push_back(r.value().with_precision(prec));
  return out;
}

std::vector<CBall> PolynomialSource::lambdas(int digits) const {
  std::vector<CBall> a = alphas(digits);
  std::vector<CBall> out;
  for (size_t j = 0; j < a.size(); ++j) {
    if (form_.h.degree() < 0) {
      out.emplace_back(a[j].precision());
      continue;
    }
    CBall v = form_.h(a[j]);
    if (lambda_real_[j]) v = CBall(v.re(), Ball(v.precision()));
    out.push_back(std::move(v));
  }
  return out;
}

FixedSource::FixedSource(std::vector<CBall> alphas, std::vector<CBall> lambdas)
    : alphas_(std::move(alphas)), lambdas_(std::move(lambdas)) {
  if (alphas_.size() != lambdas_.size()) throw InvalidInput("alphas and lambdas differ in length");
}

std::vector<CBall> FixedSource::alphas(int) const { return alphas_; }
std::vector<CBall> FixedSource::lambdas(int) const { return lambdas_; }

ProblemInstance::ProblemInstance(FieldPtr field, std::shared_ptr<const ConjugateSource> source, Rhs rhs,
                                 mpq_class Z0)
    : field_(std::move(field)), source_(std::move(source)), rhs_(std::move(rhs)), Z0_(std::move(Z0)) {
  if (!field_ || !source_) throw InvalidInput("instance needs a field and conjugates");
  if (n() < 1) throw InvalidInput("alphas list is empty");
  if (n() < 3) throw InvalidInput("need at least 3 linear factors, got " + std::to_string(n()));
  if (rhs_.c0_squared <= 0) throw InvalidInput("c0 must be positive");
  if (rhs_.k < 0) throw InvalidInput("k must be nonnegative");
  if (rhs_.k >= n()) throw FeasibilityError("k >= n makes the smallness lemma vacuous");
  if (Z0_ < 0) throw InvalidInput("Z0 must be nonnegative");

  Real best(64);
  for (const auto& l : source_->lambdas(30)) {
    Real u = numeric::abs(l).upper();
    if (best < u) best = u;
  }
  c_lambda_ = best;
}

ProblemInstance ProblemInstance::from_polynomials(FieldPoly f, FieldPoly h, Rhs rhs, mpq_class Z0) {
  FieldPtr field = f.field_ptr();
  auto src = std::make_shared<PolynomialSource>(std::move(f), std::move(h));
  return ProblemInstance(std::move(field), std::move(src), std::move(rhs), std::move(Z0));
}

bool ProblemInstance::totally_real() const {
  if (!field_->real_basis()) return false;
  for (int j = 0; j < n(); ++j) {
    if (!source_->alpha_real(j) || !source_->lambda_real(j)) return false;
  }
  return true;
}

std::string ProblemInstance::describe() const {
  std::ostringstream os;
  os << "n=" << n() << " over " << field_->describe() << ", c0^2=" << rhs_.c0_squared.get_str()
     << ", k=" << rhs_.k << ", Z0=" << Z0_.get_str();
  if (const ExactForm* e = exact()) {
    os << ", alpha: roots of " << e->f.to_string() << ", lambda = " << e->h.to_string("alpha");
  }
  return os.str();
}

}  // namespace relthue
