#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "modgame/acceptance.hpp"
#include "modgame/types.hpp"

namespace modgame::testing {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline ModelParams make(double alpha, double delta, double beta) {
  ModelParams p;
  p.alpha = alpha;
  p.delta = delta;
  p.beta = beta;
  return p;
}

// Random admissible draws covering every variant.
inline std::vector<ModelParams> sample(std::size_t per_variant, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ModelParams> out;
  for (const auto& v : all_variants()) {
    for (std::size_t k = 0; k < per_variant; ++k) out.push_back(random_params(rng, v));
  }
  return out;
}

// Same parameters with the groups relabelled: delta -> -delta, tau_A -> 1 - tau_A.
inline ModelParams mirrored(ModelParams p) {
  p.delta = -p.delta;
  p.tau_a = 1.0 - p.tau_a;
  return p;
}

inline UserType swap_group(UserType t) {
  if (t.neutral()) return t;
  return {opposite(t.ideology()), t.toxicity()};
}

}  // namespace modgame::testing
