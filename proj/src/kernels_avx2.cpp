// AVX2 kernel variants. Compiled with -mavx2 only; callers must check CPU
// support at runtime before dispatching here. FMA is deliberately not used
// so every lane matches the scalar reference bit for bit.

#include "acolb/kernels.hpp"

#include <immintrin.h>

namespace acolb::kernels {

namespace {

void avx2_scale_clamp(double* dst, const double* src, std::size_t n,
                      double factor, double lo, double hi) {
  const __m256d vf = _mm256_set1_pd(factor);
  const __m256d vlo = _mm256_set1_pd(lo);
  const __m256d vhi = _mm256_set1_pd(hi);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(src + i);
    __m256d y = _mm256_mul_pd(vf, x);
    y = _mm256_min_pd(vhi, _mm256_max_pd(vlo, y));
    _mm256_storeu_pd(dst + i, y);
  }
  for (; i < n; ++i) {
    double y = factor * src[i];
    dst[i] = y < lo ? lo : (y > hi ? hi : y);
  }
}

double avx2_max_value(const double* x, std::size_t n) {
  std::size_t i = 0;
  double m = x[0];
  if (n >= 4) {
    __m256d vm = _mm256_loadu_pd(x);
    i = 4;
    for (; i + 4 <= n; i += 4) {
      vm = _mm256_max_pd(vm, _mm256_loadu_pd(x + i));
    }
    __m128d hi128 = _mm256_extractf128_pd(vm, 1);
    __m128d lo128 = _mm256_castpd256_pd128(vm);
    __m128d m128 = _mm_max_pd(lo128, hi128);
    m128 = _mm_max_sd(m128, _mm_unpackhi_pd(m128, m128));
    m = _mm_cvtsd_f64(m128);
  }
  for (; i < n; ++i) {
    if (x[i] > m) m = x[i];
  }
  return m;
}

void avx2_inv_one_plus(double* dst, const double* src, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(src + i);
    _mm256_storeu_pd(dst + i, _mm256_div_pd(one, _mm256_add_pd(one, x)));
  }
  for (; i < n; ++i) {
    dst[i] = 1.0 / (1.0 + src[i]);
  }
}

}  // namespace

extern const Ops kAvx2Ops;
const Ops kAvx2Ops{avx2_scale_clamp, avx2_max_value, avx2_inv_one_plus};

}  // namespace acolb::kernels
