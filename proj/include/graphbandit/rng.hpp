#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace graphbandit {

using Engine = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Child seed for the substream addressed by `tags` under `parent`.
/// Derivation depends only on the tag values, never on call order, so
/// trials can be scheduled in any order and still see the same streams.
template <class... Tags>
constexpr std::uint64_t derive_seed(std::uint64_t parent, Tags... tags) noexcept {
  std::uint64_t h = splitmix64(parent);
  ((h = splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(tags)))), ...);
  return h;
}

/// Top 53 bits mapped to [0, 1).
constexpr double to_unit(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

/// Stream tags used by the experiment runner.
namespace stream {
inline constexpr std::uint64_t kGraph = 1;
inline constexpr std::uint64_t kInstance = 2;
inline constexpr std::uint64_t kRewards = 3;
inline constexpr std::uint64_t kPolicy = 4;
inline constexpr std::uint64_t kGroups = 5;
inline constexpr std::uint64_t kFixedInstance = 6;
}  // namespace stream

}  // namespace graphbandit
