#pragma once

#include "modgame/types.hpp"

namespace modgame {

// Per-post reach as a function of aggregate surviving supply V in [0, 1].
// All shapes satisfy R(0) = 1 and are strictly decreasing:
//   linear       1 - V
//   inverse      1 / (1 + V)
//   exponential  exp(-V)
//   logistic     sigmoid(k (v0 - V)) / sigmoid(k v0)
double reach(double supply, const ReachFunction& rf);

// dR/dV, used by the uniqueness bound in tests.
double reach_slope(double supply, const ReachFunction& rf);

}  // namespace modgame
