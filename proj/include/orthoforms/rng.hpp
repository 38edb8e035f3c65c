#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "orthoforms/rational.hpp"

namespace orthoforms {

/// Deterministic RNG with implementation-independent integer draws
/// (mt19937_64 plus rejection sampling; no std distributions, which are
/// not pinned across standard libraries).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    for (;;) {
      std::uint64_t v = engine_();
      if (v < limit) return v % n;
    }
  }

  /// Uniform in [lo, hi] inclusive.
  long int_in(long lo, long hi) {
    return lo + long(below(std::uint64_t(hi - lo + 1)));
  }

private:
  std::mt19937_64 engine_;
};

/// Stream derivation: one global seed plus a label yields an independent,
/// schedule-independent substream seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                                 std::uint64_t index = 0) {
  std::uint64_t h = fnv1a64(label);
  h = fnv1a64(&seed, sizeof(seed), h);
  h = fnv1a64(&index, sizeof(index), h);
  return h;
}

}  // namespace orthoforms
