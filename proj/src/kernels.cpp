#include "acolb/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace acolb::kernels {

namespace {

void scalar_scale_clamp(double* dst, const double* src, std::size_t n,
                        double factor, double lo, double hi) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = std::min(hi, std::max(lo, factor * src[i]));
  }
}

double scalar_max_value(const double* x, std::size_t n) {
  double m = x[0];
  for (std::size_t i = 1; i < n; ++i) {
    m = std::max(m, x[i]);
  }
  return m;
}

void scalar_inv_one_plus(double* dst, const double* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = 1.0 / (1.0 + src[i]);
  }
}

constexpr Ops kScalarOps{scalar_scale_clamp, scalar_max_value,
                         scalar_inv_one_plus};

}  // namespace

#if defined(ACOLB_KERNELS_AVX2)
extern const Ops kAvx2Ops;  // kernels_avx2.cpp
#endif
#if defined(ACOLB_KERNELS_NEON)
extern const Ops kNeonOps;  // kernels_neon.cpp
#endif

namespace {

const Ops* variant_ops_or_null(Variant v) {
  switch (v) {
    case Variant::scalar:
      return &kScalarOps;
    case Variant::avx2:
#if defined(ACOLB_KERNELS_AVX2)
      if (__builtin_cpu_supports("avx2")) return &kAvx2Ops;
#endif
      return nullptr;
    case Variant::neon:
#if defined(ACOLB_KERNELS_NEON)
      return &kNeonOps;  // aarch64 implies NEON
#endif
      return nullptr;
  }
  return nullptr;
}

std::atomic<const Ops*> g_active{nullptr};
std::atomic<Variant> g_active_variant{Variant::scalar};

const Ops* active_ops() {
  const Ops* ops = g_active.load(std::memory_order_relaxed);
  if (ops == nullptr) {
    set_active(best_available());
    ops = g_active.load(std::memory_order_relaxed);
  }
  return ops;
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::scalar: return "scalar";
    case Variant::avx2: return "avx2";
    case Variant::neon: return "neon";
  }
  return "unknown";
}

bool variant_available(Variant v) { return variant_ops_or_null(v) != nullptr; }

const Ops& ops(Variant v) {
  const Ops* ops = variant_ops_or_null(v);
  if (ops == nullptr) {
    throw std::runtime_error("kernel variant unavailable: " +
                             std::string(variant_name(v)));
  }
  return *ops;
}

Variant best_available() {
  if (variant_available(Variant::avx2)) return Variant::avx2;
  if (variant_available(Variant::neon)) return Variant::neon;
  return Variant::scalar;
}

Variant active() {
  active_ops();
  return g_active_variant.load(std::memory_order_relaxed);
}

void set_active(Variant v) {
  const Ops& selected = ops(v);
  g_active.store(&selected, std::memory_order_relaxed);
  g_active_variant.store(v, std::memory_order_relaxed);
}

void scale_clamp(double* dst, const double* src, std::size_t n, double factor,
                 double lo, double hi) {
  active_ops()->scale_clamp(dst, src, n, factor, lo, hi);
}

double max_value(const double* x, std::size_t n) {
  return active_ops()->max_value(x, n);
}

void inv_one_plus(double* dst, const double* src, std::size_t n) {
  active_ops()->inv_one_plus(dst, src, n);
}

}  // namespace acolb::kernels
