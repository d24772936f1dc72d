#include <immintrin.h>

#include "relthue/enumeration/filter.hpp"

namespace relthue::enumeration {

void filter_avx2(const FilterBatch& b) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d rel = _mm256_set1_pd(kFilterRelErr);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  size_t c = 0;
  for (; c + 4 <= b.count; c += 4) {
    const __m256d x = _mm256_loadu_pd(b.x1 + c);
    const __m256d xerr = _mm256_mul_pd(rel, _mm256_andnot_pd(sign_mask, x));
    __m256d prod = one;
    for (int j = 0; j < b.n; ++j) {
      const __m256d re = _mm256_add_pd(x, _mm256_set1_pd(b.q_re[j]));
      const __m256d im = _mm256_set1_pd(b.q_im[j]);
      const __m256d mag = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im)));
      __m256d lb = _mm256_sub_pd(mag, _mm256_add_pd(_mm256_set1_pd(b.err[j]), xerr));
      lb = _mm256_max_pd(lb, zero);
      prod = _mm256_mul_pd(prod, lb);
    }
    const __m256d rhs = _mm256_loadu_pd(b.rhs + c);
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(prod, rhs, _CMP_LE_OQ));
    for (int l = 0; l < 4; ++l) b.keep[c + static_cast<size_t>(l)] = static_cast<std::uint8_t>((mask >> l) & 1);
  }
  if (c < b.count) {
    FilterBatch tail = b;
    tail.x1 += c;
    tail.rhs += c;
    tail.keep += c;
    tail.count = b.count - c;
    filter_scalar(tail);
  }
}

}  // namespace relthue::enumeration
