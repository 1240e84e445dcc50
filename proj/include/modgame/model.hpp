#pragma once

#include <array>

#include "modgame/types.hpp"

namespace modgame {

// Table 1 masses, scaled by (1 - lambda_N) for partisans under the neutral
// variant. Inactive types carry zero mass.
struct PopulationProfile {
  TypeArray<double> mass{};
  std::array<double, 3> group_mass{};  // indexed by Ideology

  double operator[](UserType type) const { return mass[type.index()]; }
  double group(Ideology ideology) const {
    return group_mass[static_cast<std::size_t>(ideology)];
  }
};

struct EngagementProbabilities {
  double like = 0.0;
  double dislike = 0.0;
};

// Expected net engagement of one creator type, split by reader pool.
// For a neutral creator the in-group pool is the neutral readership and
// both partisan groups count as out-group.
struct EngagementProfile {
  UserType creator = types::kANT;
  double ne_in = 0.0;
  double ne_out = 0.0;
  double ne_neutral = 0.0;
  double total = 0.0;
};

PopulationProfile population_masses(const ModelParams& params);

// Non-stochastic part mu of the reader's consumption utility.
double deterministic_utility(UserType reader, UserType creator, const ModelParams& params);

// With eps ~ U[-1, 1]: like iff mu + eps >= 0, dislike iff mu + eps <= -gamma.
EngagementProbabilities engagement_probs(UserType reader, UserType creator,
                                         const ModelParams& params);

// omega(t): identity in every variant except NegativeEngagementLoving.
double negative_engagement_weight(Toxicity creator_toxicity, const ModelParams& params);

double survival(Toxicity toxicity, double beta);

EngagementProfile net_engagement(UserType creator, const ModelParams& params);
EngagementProfile net_engagement(UserType creator, const ModelParams& params,
                                 const PopulationProfile& population);

// Reach-weighted engagement coefficient: (ne_in + ne_neutral) + (1-phi) ne_out,
// with the out-group weight equal to 1 outside Personalization.
double effective_engagement(const EngagementProfile& profile, const ModelParams& params);

// P_c = clamp((1 + S * R * E) / 2, 0, 1): the probability that a U[-1,1]
// intrinsic shock makes creation utility strictly positive.
inline double creation_from_utility(double survival_rate, double reach_value,
                                    double engagement) {
  const double raw = (1.0 + survival_rate * (reach_value * engagement)) * 0.5;
  return raw < 0.0 ? 0.0 : (raw > 1.0 ? 1.0 : raw);
}

double creation_probability(UserType creator, double supply, const ModelParams& params);

// Everything about a creator's decision that does not depend on V.
struct CreatorIncentives {
  PopulationProfile population;
  TypeArray<double> survival{};
  TypeArray<double> engagement{};  // effective_engagement per type
  TypeArray<EngagementProfile> profiles{};
};

CreatorIncentives creator_incentives(const ModelParams& params);

// V = sum lambda * S * P_c over active types.
double content_supply(const TypeArray<double>& pc, const ModelParams& params);

}  // namespace modgame
