// NEON kernel variants for aarch64. Same bit-exactness contract as the
// scalar reference: per-lane multiply/divide/min/max only, no FMA.

#include "acolb/kernels.hpp"

#include <arm_neon.h>

namespace acolb::kernels {

namespace {

void neon_scale_clamp(double* dst, const double* src, std::size_t n,
                      double factor, double lo, double hi) {
  const float64x2_t vf = vdupq_n_f64(factor);
  const float64x2_t vlo = vdupq_n_f64(lo);
  const float64x2_t vhi = vdupq_n_f64(hi);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t y = vmulq_f64(vf, vld1q_f64(src + i));
    y = vminq_f64(vhi, vmaxq_f64(vlo, y));
    vst1q_f64(dst + i, y);
  }
  for (; i < n; ++i) {
    double y = factor * src[i];
    dst[i] = y < lo ? lo : (y > hi ? hi : y);
  }
}

double neon_max_value(const double* x, std::size_t n) {
  std::size_t i = 0;
  double m = x[0];
  if (n >= 2) {
    float64x2_t vm = vld1q_f64(x);
    i = 2;
    for (; i + 2 <= n; i += 2) {
      vm = vmaxq_f64(vm, vld1q_f64(x + i));
    }
    m = vmaxvq_f64(vm);
  }
  for (; i < n; ++i) {
    if (x[i] > m) m = x[i];
  }
  return m;
}

void neon_inv_one_plus(double* dst, const double* src, std::size_t n) {
  const float64x2_t one = vdupq_n_f64(1.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(dst + i, vdivq_f64(one, vaddq_f64(one, vld1q_f64(src + i))));
  }
  for (; i < n; ++i) {
    dst[i] = 1.0 / (1.0 + src[i]);
  }
}

}  // namespace

extern const Ops kNeonOps;
const Ops kNeonOps{neon_scale_clamp, neon_max_value, neon_inv_one_plus};

}  // namespace acolb::kernels
