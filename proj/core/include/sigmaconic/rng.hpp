#pragma once

// Counter-based SplitMix64. Draw c (c = 0, 1, 2, ...) of a stream with seed s
// is mix(s + (c + 1) * 0x9E3779B97F4A7C15), so any draw can be reproduced
// without replaying the ones before it.

#include <cstdint>

namespace sigmaconic {

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64_mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
}

// Field element code for draw c: z mod Q.
inline constexpr std::uint32_t draw_element(std::uint64_t seed, std::uint64_t counter, std::uint32_t Q) {
  return static_cast<std::uint32_t>(splitmix64_at(seed, counter) % Q);
}

}  // namespace sigmaconic
