#pragma once

#include <cstdint>

namespace citsdid {

// Small deterministic generator (splitmix64) so simulated panels are
// bit-identical across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms per draw.
  double next_normal();

 private:
  std::uint64_t state_;
};

// Derives the per-repetition seed for Monte Carlo streams: one splitmix64
// scramble of base XOR (stream+1)*golden-ratio increment. Documented so runs
// are reproducible from (base_seed, rep index) alone.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t stream);

}  // namespace citsdid
