#pragma once

// Deterministic randomness.  All sampling in the library funnels through
// mt19937_64 (fully specified by the standard, so streams are reproducible
// across platforms) with rejection sampling for unbiased bounded draws.
// Derived seeds (per class / per trial) come from splitmix64 so independent
// streams never share state.

#include <cstdint>
#include <random>

namespace otk {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

// Uniform draw from [0, n), unbiased via rejection.
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) {
  const std::uint64_t limit = n == 0 ? 0 : UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = g();
  } while (x >= limit);
  return x % n;
}

// Uniform draw from [lo, hi] inclusive.
inline std::int64_t uniform_int(std::mt19937_64& g, std::int64_t lo,
                                std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_below(g, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace otk
