#include "farey/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define FAREY_HAVE_X86 1
#endif

namespace farey::kernels {

#ifdef FAREY_HAVE_X86

// All operands are integers below 2^51, so doubles hold them exactly and the
// quotient needs at most one correction step.
__attribute__((target("avx2"))) void harmonic_index_row_avx2(const HarmonicRow& row,
                                                             std::int32_t* j,
                                                             std::uint8_t* on_line) {
  const __m256d n = _mm256_set1_pd(static_cast<double>(row.n));
  const __m256d v = _mm256_set1_pd(static_cast<double>(row.v));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d step = _mm256_set1_pd(static_cast<double>(row.du) * 4.0);
  __m256d u = _mm256_set_pd(static_cast<double>(row.u0 + 3 * row.du),
                            static_cast<double>(row.u0 + 2 * row.du),
                            static_cast<double>(row.u0 + row.du), static_cast<double>(row.u0));
  std::size_t i = 0;
  for (; i + 4 <= row.count; i += 4) {
    __m256d b = _mm256_sub_pd(n, _mm256_min_pd(u, v));
    __m256d a = _mm256_sub_pd(_mm256_add_pd(u, v), one);
    __m256d q = _mm256_floor_pd(_mm256_div_pd(a, b));
    __m256d rem = _mm256_sub_pd(a, _mm256_mul_pd(q, b));
    __m256d low = _mm256_cmp_pd(rem, zero, _CMP_LT_OQ);
    q = _mm256_sub_pd(q, _mm256_and_pd(low, one));
    rem = _mm256_add_pd(rem, _mm256_and_pd(low, b));
    __m256d high = _mm256_cmp_pd(rem, b, _CMP_GE_OQ);
    q = _mm256_add_pd(q, _mm256_and_pd(high, one));
    rem = _mm256_sub_pd(rem, _mm256_and_pd(high, b));
    __m256d line = _mm256_cmp_pd(rem, _mm256_sub_pd(b, one), _CMP_EQ_OQ);
    __m128i qi = _mm256_cvtpd_epi32(q);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(j + i), qi);
    int mask = _mm256_movemask_pd(line);
    for (int l = 0; l < 4; ++l) on_line[i + l] = (mask >> l) & 1;
    u = _mm256_add_pd(u, step);
  }
  if (i < row.count) {
    HarmonicRow tail = row;
    tail.u0 = row.u0 + row.du * static_cast<std::int64_t>(i);
    tail.count = row.count - i;
    harmonic_index_row_scalar(tail, j + i, on_line + i);
  }
}

#else

void harmonic_index_row_avx2(const HarmonicRow& row, std::int32_t* j, std::uint8_t* on_line) {
  harmonic_index_row_scalar(row, j, on_line);
}

#endif

}  // namespace farey::kernels
