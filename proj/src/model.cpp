#include "modgame/model.hpp"

#include <algorithm>
#include <string>

#include "modgame/reach.hpp"

namespace modgame {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void require_valid_type(UserType type, const ModelParams& params) {
  if (type.neutral() && !has_neutral_users(params)) {
    throw Error(ErrorCode::kDomain, "type " + to_string(type) +
                                        " only exists under the neutral_users variant");
  }
}

}  // namespace

PopulationProfile population_masses(const ModelParams& params) {
  validate(params);
  const double neutral = neutral_mass(params);
  const double scale = 1.0 - neutral;
  const double size_a = 0.5 + params.delta;
  const double size_b = 0.5 - params.delta;
  const double toxic_a = params.x * params.tau_a;
  const double toxic_b = params.x * (1.0 - params.tau_a);

  PopulationProfile out;
  // max() only absorbs the validation slack at the admissibility edge.
  out.mass[types::kAT.index()] = scale * toxic_a;
  out.mass[types::kANT.index()] = scale * std::max(0.0, size_a - toxic_a);
  out.mass[types::kBT.index()] = scale * toxic_b;
  out.mass[types::kBNT.index()] = scale * std::max(0.0, size_b - toxic_b);
  out.mass[types::kNNT.index()] = neutral;
  out.group_mass[static_cast<std::size_t>(Ideology::kA)] = scale * size_a;
  out.group_mass[static_cast<std::size_t>(Ideology::kB)] = scale * size_b;
  out.group_mass[static_cast<std::size_t>(Ideology::kN)] = neutral;
  return out;
}

double deterministic_utility(UserType reader, UserType creator, const ModelParams& params) {
  require_valid_type(reader, params);
  require_valid_type(creator, params);

  // Neutral readers weigh toxicity only: V(t') with no (1 - alpha) factor.
  if (reader.neutral()) return creator.toxic() ? -1.0 : 0.0;
  // Partisan readers of neutral content take the moderate horizontal penalty
  // H = -1/2 unweighted; neutral content is never toxic.
  if (creator.neutral()) return -0.5;

  const double alpha = params.alpha;
  const double horizontal = reader.ideology() == creator.ideology() ? 0.0 : -1.0;
  if (!creator.toxic()) return alpha * horizontal;

  if (reader.toxic() && reader.ideology() == creator.ideology()) {
    const double kappa = homophily_strength(params);
    // (1 - alpha) * (kappa alpha / (1 - alpha) - 1), written without the pole.
    if (kappa > 0.0) return kappa * alpha - (1.0 - alpha);
  }
  // alpha * H + (1 - alpha) * V with V = -1; exact -1 for cross-group toxic.
  return alpha * horizontal - (1.0 - alpha);
}

EngagementProbabilities engagement_probs(UserType reader, UserType creator,
                                         const ModelParams& params) {
  const double mu = deterministic_utility(reader, creator, params);
  return {clamp01((1.0 + mu) * 0.5), clamp01((1.0 - params.gamma - mu) * 0.5)};
}

double negative_engagement_weight(Toxicity creator_toxicity, const ModelParams& params) {
  if (std::holds_alternative<NegativeEngagementLoving>(params.variant) &&
      creator_toxicity == Toxicity::kToxic) {
    return -params.omega;
  }
  return params.omega;
}

double survival(Toxicity toxicity, double beta) {
  return toxicity == Toxicity::kToxic ? 1.0 - beta : 1.0;
}

EngagementProfile net_engagement(UserType creator, const ModelParams& params) {
  return net_engagement(creator, params, population_masses(params));
}

EngagementProfile net_engagement(UserType creator, const ModelParams& params,
                                 const PopulationProfile& population) {
  require_valid_type(creator, params);
  const double weight = negative_engagement_weight(creator.toxicity(), params);

  EngagementProfile out;
  out.creator = creator;
  // Readers are always enumerated at (ideology, toxicity) granularity.
  for (UserType reader : active_types(params)) {
    const auto p = engagement_probs(reader, creator, params);
    const double term = population[reader] * (p.like + weight * p.dislike);
    if (reader.ideology() == creator.ideology()) {
      out.ne_in += term;
    } else if (reader.neutral()) {
      out.ne_neutral += term;
    } else {
      out.ne_out += term;
    }
  }
  out.total = out.ne_in + out.ne_out + out.ne_neutral;
  return out;
}

double effective_engagement(const EngagementProfile& profile, const ModelParams& params) {
  return (profile.ne_in + profile.ne_neutral) + out_group_weight(params) * profile.ne_out;
}

double creation_probability(UserType creator, double supply, const ModelParams& params) {
  if (!(supply >= 0.0 && supply <= 1.0)) {
    throw Error(ErrorCode::kDomain,
                "creation probability needs V in [0, 1] (got " + std::to_string(supply) + ")");
  }
  const auto profile = net_engagement(creator, params);
  return creation_from_utility(survival(creator.toxicity(), params.beta),
                               reach(supply, params.reach),
                               effective_engagement(profile, params));
}

CreatorIncentives creator_incentives(const ModelParams& params) {
  CreatorIncentives out;
  out.population = population_masses(params);
  for (UserType t : active_types(params)) {
    const std::size_t k = t.index();
    out.survival[k] = survival(t.toxicity(), params.beta);
    out.profiles[k] = net_engagement(t, params, out.population);
    out.engagement[k] = effective_engagement(out.profiles[k], params);
  }
  return out;
}

double content_supply(const TypeArray<double>& pc, const ModelParams& params) {
  const auto population = population_masses(params);
  double supply = 0.0;
  for (UserType t : active_types(params)) {
    const double p = pc[t.index()];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kDomain, "creation probability of " + to_string(t) +
                                          " outside [0, 1]");
    }
    supply += population[t] * survival(t.toxicity(), params.beta) * p;
  }
  return supply;
}

}  // namespace modgame
