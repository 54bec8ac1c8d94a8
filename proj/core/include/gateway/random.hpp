#pragma once

#include <cstdint>
#include <random>

namespace gateway {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based stream seed: stream `index` of `base` never depends on how many
/// other streams were drawn before it.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(base) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t base, std::uint64_t index) {
  return Rng{derive_seed(base, index)};
}

}  // namespace gateway
