#pragma once

#include <cstdint>
#include <span>

namespace modgame {

// Counter-based uniform shocks. Draw (seed, stream, index) is the SplitMix64
// finalizer applied twice to a Weyl-sequence combination of the three
// integers; the top 53 bits give u in [0, 1) and the shock is -1 + 2u, which
// is exact and lies in [-1, 1). Any subset of draws can be regenerated
// independently, so serial and parallel runs agree.
namespace rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t index) {
  const std::uint64_t key = mix64(seed + kGolden * (stream + 1));
  return mix64(key + kGolden * (index + 1));
}

constexpr double unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double uniform_shock(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return -1.0 + 2.0 * unit(counter_bits(seed, stream, index));
}

inline void fill_shocks(std::uint64_t seed, std::uint64_t stream, std::uint64_t first_index,
                        std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = uniform_shock(seed, stream, first_index + i);
  }
}

}  // namespace rng
}  // namespace modgame
