#pragma once

#include <cstdint>
#include <random>

namespace acolb {

// Deterministic random source for a single run. std::mt19937_64 is fully
// specified by the standard, so the raw stream is identical on every
// platform. The integer and real mappings are pinned here instead of using
// std::uniform_*_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased integer in [0, n) by masked rejection; n >= 1.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      std::uint64_t r = next() & mask;
      if (r < n) return r;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace acolb
