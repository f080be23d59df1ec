#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fognet {

// All randomness in the project flows through these helpers. std::mt19937_64
// is fully specified by the standard; the distributions below are written out
// explicitly because the std:: distribution objects are implementation-defined
// and would break the reproducibility contract across standard libraries.

// SplitMix64 finalizer, used to derive independent seeds from (seed, salt).
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) via rejection sampling (unbiased).
inline uint64_t uniform_index(std::mt19937_64& rng, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Standard normal via Box-Muller. One value per call; no internal state.
inline double gaussian(std::mt19937_64& rng) {
  double u1;
  do {
    u1 = uniform_unit(rng);
  } while (u1 <= 0.0);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace fognet
