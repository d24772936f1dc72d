#include <cstdlib>
#include <cstring>

#include "relthue/enumeration/filter.hpp"

namespace relthue::enumeration {

bool simd_available(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar:
      return true;
    case SimdLevel::Avx2:
#if defined(RELTHUE_WITH_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

SimdLevel detect_simd() {
  if (const char* env = std::getenv("RELTHUE_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return SimdLevel::Scalar;
    if (std::strcmp(env, "avx2") == 0 && simd_available(SimdLevel::Avx2)) return SimdLevel::Avx2;
  }
  return simd_available(SimdLevel::Avx2) ? SimdLevel::Avx2 : SimdLevel::Scalar;
}

std::string to_string(SimdLevel level) { return level == SimdLevel::Avx2 ? "avx2" : "scalar"; }

void run_filter(const FilterBatch& b, SimdLevel level) {
#if defined(RELTHUE_WITH_AVX2)
  if (level == SimdLevel::Avx2 && simd_available(SimdLevel::Avx2)) {
    filter_avx2(b);
    return;
  }
#endif
  (void)level;
  filter_scalar(b);
}

void run_filter(const FilterBatch& b) {
  static const SimdLevel level = detect_simd();
  run_filter(b, level);
}

}  // namespace relthue::enumeration
