#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace orthoforms {

using Int = mpz_class;
using Rat = mpq_class;

/// Rational from numerator/denominator, canonicalized (lowest terms,
/// positive denominator). mpq_class constructors do not canonicalize.
inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a" or "a/b". Throws std::invalid_argument on malformed input.
Rat rat_from_string(std::string_view text);

std::string rat_to_string(const Rat& q);

Rat rat_pow(const Rat& base, unsigned long exp);

int rat_sign(const Rat& q);

/// 64-bit FNV-1a, the content-hash primitive used by the cache and reports.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t seed = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t fnv1a64(std::string_view s,
                             std::uint64_t seed = 0xcbf29ce484222325ULL) {
  return fnv1a64(s.data(), s.size(), seed);
}

std::string hash_to_hex(std::uint64_t h);

}  // namespace orthoforms
