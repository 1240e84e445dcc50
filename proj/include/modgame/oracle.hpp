#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modgame/equilibrium.hpp"

namespace modgame {

// A finite population with stratified type counts (rounded expectations,
// largest remainder) and one fixed intrinsic creation shock per agent.
// Agents are stored grouped by type in index order.
struct AgentPool {
  std::uint64_t seed = 0;
  std::size_t size = 0;
  TypeArray<std::size_t> counts{};
  TypeArray<std::size_t> offsets{};
  std::vector<double> shocks;

  UserType type_of(std::size_t agent) const;
  std::span<const double> block(UserType type) const {
    return std::span<const double>(shocks).subspan(offsets[type.index()], counts[type.index()]);
  }
};

inline constexpr std::size_t kMinAgents = 1000;
inline constexpr std::size_t kMinEvents = 100000;

TypeArray<std::size_t> stratified_counts(const ModelParams& params, std::size_t n);
AgentPool sample_population(const ModelParams& params, std::size_t n, std::uint64_t seed);

struct PairFrequency {
  UserType reader = types::kANT;
  UserType creator = types::kANT;
  std::uint64_t events = 0;
  std::uint64_t likes = 0;
  std::uint64_t dislikes = 0;

  double p_like() const { return static_cast<double>(likes) / static_cast<double>(events); }
  double p_dislike() const {
    return static_cast<double>(dislikes) / static_cast<double>(events);
  }
};

// Draws eps_r ~ U[-1, 1] per event for every (reader, creator) pair of the
// variant and applies the like / dislike thresholds.
std::vector<PairFrequency> simulate_engagement(const ModelParams& params, std::size_t n_events,
                                               std::uint64_t seed);

struct SimulationReport {
  std::uint64_t seed = 0;
  std::size_t agents = 0;
  TypeArray<std::size_t> counts{};
  TypeArray<double> empirical_pc{};
  TypeArray<double> analytic_pc{};
  TypeArray<double> deviation{};
  double empirical_supply = 0.0;
  double analytic_supply = 0.0;
  double max_deviation = 0.0;
  std::size_t rounds = 0;
  bool converged = false;       // a round in which no agent wanted to switch
  bool cycle_detected = false;  // synchronous phase revisited an earlier V
  std::size_t inertial_rounds = 0;
  bool within_tolerance = false;
  std::vector<double> trajectory;  // realized V after each round
};

// max(0.01, 5 sqrt(0.25 / count)): binomial 5-sigma band with a floor.
double agreement_tolerance(std::size_t count);

// Best-response dynamics on the finite pool. Round 0 decides against the
// common belief V = 1/2. Afterwards an agent creates iff
// S R(V') E(type) + eps > 0, where V' is the realized supply with the agent's
// own post included, i.e. the finite game's Nash condition. Updates are
// synchronous until the V trajectory revisits an earlier value; from then on
// each agent revises with probability 1/2 per round (counter-based coin) to
// break the cycle. Converged means no agent wants to switch.
SimulationReport simulate_equilibrium(const AgentPool& pool, const ModelParams& params,
                                      std::size_t max_rounds = 1000);

}  // namespace modgame
