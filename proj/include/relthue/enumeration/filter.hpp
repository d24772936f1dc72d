#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace relthue::enumeration {

/// One batch of the fast candidate filter. For fixed Y and x_2..x_m the
/// linear forms are beta_j(x1) = x1 + q_j, and a candidate survives when
///   prod_j max(0, |beta_j| - err_j - 1e-13 |x1|) <= rhs[c].
/// Lower bounds only, so the filter never drops a true solution.
struct FilterBatch {
  int n = 0;
  const double* q_re = nullptr;
  const double* q_im = nullptr;
  const double* err = nullptr;
  size_t count = 0;
  const double* x1 = nullptr;
  const double* rhs = nullptr;
  std::uint8_t* keep = nullptr;
};

inline constexpr double kFilterRelErr = 1e-13;

enum class SimdLevel { Scalar, Avx2 };

void filter_scalar(const FilterBatch& b);
#if defined(RELTHUE_WITH_AVX2)
void filter_avx2(const FilterBatch& b);
#endif

/// Best level the CPU supports, overridable with RELTHUE_SIMD=scalar|avx2.
SimdLevel detect_simd();
bool simd_available(SimdLevel level);
std::string to_string(SimdLevel level);
/// Runs the kernel for `level` (falls back to scalar if unavailable).
void run_filter(const FilterBatch& b, SimdLevel level);
void run_filter(const FilterBatch& b);

}  // namespace relthue::enumeration
