#pragma once

#include <stdexcept>
#include <string>

namespace relthue {

/// Base class for every failure the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RELTHUE_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(std::string(#Name ": ") + what) {} \
  };

RELTHUE_DEFINE_ERROR(NotSquarefree)
RELTHUE_DEFINE_ERROR(PrecisionExhausted)
RELTHUE_DEFINE_ERROR(SingularBasis)
RELTHUE_DEFINE_ERROR(DegenerateAlpha)
RELTHUE_DEFINE_ERROR(BelowThreshold)
RELTHUE_DEFINE_ERROR(FeasibilityError)
RELTHUE_DEFINE_ERROR(NoProgress)
RELTHUE_DEFINE_ERROR(NotTotallyReal)
RELTHUE_DEFINE_ERROR(UnsupportedRHS)
RELTHUE_DEFINE_ERROR(InvalidInput)

#undef RELTHUE_DEFINE_ERROR

/// Enumeration box too large for the configured budget. Carries the
/// budget that would have been required so callers can raise it.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(double required, double budget)
      : Error("BudgetExceeded: enumeration needs ~" + std::to_string(required) +
              " candidate evaluations, budget is " + std::to_string(budget)),
        required_(required) {}
  double required() const { return required_; }

 private:
  double required_;
};

}  // namespace relthue
