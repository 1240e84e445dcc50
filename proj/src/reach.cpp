#include "modgame/reach.hpp"

#include <cmath>
#include <string>

namespace modgame {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void check_supply(double supply) {
  if (!(supply >= 0.0 && supply <= 1.0)) {
    throw Error(ErrorCode::kDomain,
                "reach evaluated outside [0, 1] (V = " + std::to_string(supply) + ")");
  }
}

}  // namespace

double reach(double supply, const ReachFunction& rf) {
  check_supply(supply);
  switch (rf.kind) {
    case ReachKind::kLinear: return 1.0 - supply;
    case ReachKind::kInverse: return 1.0 / (1.0 + supply);
    case ReachKind::kExponential: return std::exp(-supply);
    case ReachKind::kLogistic:
      return sigmoid(rf.steepness * (rf.midpoint - supply)) /
             sigmoid(rf.steepness * rf.midpoint);
  }
  return 0.0;
}

double reach_slope(double supply, const ReachFunction& rf) {
  check_supply(supply);
  switch (rf.kind) {
    case ReachKind::kLinear: return -1.0;
    case ReachKind::kInverse: return -1.0 / ((1.0 + supply) * (1.0 + supply));
    case ReachKind::kExponential: return -std::exp(-supply);
    case ReachKind::kLogistic: {
      const double s = sigmoid(rf.steepness * (rf.midpoint - supply));
      return -rf.steepness * s * (1.0 - s) / sigmoid(rf.steepness * rf.midpoint);
    }
  }
  return 0.0;
}

}  // namespace modgame
