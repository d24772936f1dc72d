#include <cmath>

#include "relthue/enumeration/filter.hpp"

namespace relthue::enumeration {

// Reference kernel. The AVX2 kernel performs the same operations in the
// same order, so both produce bit-identical decisions.
void filter_scalar(const FilterBatch& b) {
  for (size_t c = 0; c < b.count; ++c) {
    const double x = b.x1[c];
    const double xerr = kFilterRelErr * std::fabs(x);
    double prod = 1.0;
    for (int j = 0; j < b.n; ++j) {
      const double re = x + b.q_re[j];
      const double im = b.q_im[j];
      const double mag = std::sqrt(re * re + im * im);
      double lb = mag - (b.err[j] + xerr);
      lb = lb > 0.0 ? lb : 0.0;
      prod = prod * lb;
    }
    b.keep[c] = prod <= b.rhs[c] ? 1 : 0;
  }
}

}  // namespace relthue::enumeration
