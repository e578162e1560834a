#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace fatpoints {

// Every randomized routine takes one of these by reference; a fixed seed gives
// fixed output on every platform because we never go through the
// implementation-defined std distributions.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline std::int64_t uniform_between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// FNV-1a; used to derive independent per-case seeds from a master seed.
inline std::uint64_t hash_label(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline Rng derive_rng(std::uint64_t seed, std::string_view label) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(hash_label(label)),
                    static_cast<std::uint32_t>(hash_label(label) >> 32)};
  return Rng(seq);
}

}  // namespace fatpoints
