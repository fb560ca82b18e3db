#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel inner loops shared by the pheromone table, the heuristic
// computation and the metrics code. Each kernel has a scalar reference
// implementation plus SIMD variants (AVX2 on x86-64, NEON on aarch64)
// selected at runtime and equivalence-tested against the reference.
//
// Every variant is bit-exact against the scalar reference: the lane
// operations (multiply, divide, min, max) are IEEE-754 exact and the only
// reduction, max, is order-insensitive for non-NaN input. Sum-style
// reductions live outside this module so simulation traces never depend on
// the variant in use.

namespace acolb::kernels {

enum class Variant { scalar, avx2, neon };

struct Ops {
  // dst[i] = min(hi, max(lo, factor * src[i])); dst may alias src
  void (*scale_clamp)(double* dst, const double* src, std::size_t n,
                      double factor, double lo, double hi);
  // max over x[0..n); requires n >= 1 and no NaNs
  double (*max_value)(const double* x, std::size_t n);
  // dst[i] = 1.0 / (1.0 + src[i]); requires src[i] > -1; dst may alias src
  void (*inv_one_plus)(double* dst, const double* src, std::size_t n);
};

std::string_view variant_name(Variant v);

// Compiled in and supported by this CPU.
bool variant_available(Variant v);

// Direct access to one variant's entry points (for equivalence tests);
// throws std::runtime_error when the variant is unavailable.
const Ops& ops(Variant v);

Variant best_available();
Variant active();
void set_active(Variant v);  // throws std::runtime_error if unavailable

// Dispatch through the active variant.
void scale_clamp(double* dst, const double* src, std::size_t n, double factor,
                 double lo, double hi);
double max_value(const double* x, std::size_t n);
void inv_one_plus(double* dst, const double* src, std::size_t n);

}  // namespace acolb::kernels
