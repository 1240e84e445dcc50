#include "modgame/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "modgame/kernels.hpp"
#include "modgame/rng.hpp"

namespace modgame {

namespace {

constexpr std::uint64_t kAgentStream = 1;
constexpr std::uint64_t kEngagementStreamBase = 1000;
constexpr std::uint64_t kInertiaStreamBase = 1u << 20;
constexpr std::size_t kShockChunk = 4096;

}  // namespace

UserType AgentPool::type_of(std::size_t agent) const {
  for (UserType t : types::kAll) {
    const std::size_t k = t.index();
    if (agent >= offsets[k] && agent < offsets[k] + counts[k]) return t;
  }
  throw Error(ErrorCode::kDomain, "agent index " + std::to_string(agent) + " out of range");
}

TypeArray<std::size_t> stratified_counts(const ModelParams& params, std::size_t n) {
  const auto pop = population_masses(params);
  TypeArray<std::size_t> counts{};
  std::array<double, kTypeCount> remainder{};
  std::size_t assigned = 0;
  for (UserType t : active_types(params)) {
    const double expected = pop[t] * static_cast<double>(n);
    const double whole = std::floor(expected);
    counts[t.index()] = static_cast<std::size_t>(whole);
    remainder[t.index()] = expected - whole;
    assigned += counts[t.index()];
  }
  // Largest remainder, ties broken by type index.
  std::array<std::size_t, kTypeCount> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < n; k = (k + 1) % kTypeCount) {
    if (remainder[order[k]] > 0.0 || k == 0) {
      ++counts[order[k]];
      ++assigned;
    }
  }
  return counts;
}

AgentPool sample_population(const ModelParams& params, std::size_t n, std::uint64_t seed) {
  if (n < kMinAgents) {
    throw Error(ErrorCode::kDomain, "agent pool needs at least " + std::to_string(kMinAgents) +
                                        " agents (got " + std::to_string(n) + ")");
  }
  AgentPool pool;
  pool.seed = seed;
  pool.size = n;
  pool.counts = stratified_counts(params, n);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < kTypeCount; ++k) {
    pool.offsets[k] = offset;
    offset += pool.counts[k];
  }
  pool.shocks.resize(n);
  rng::fill_shocks(seed, kAgentStream, 0, pool.shocks);
  return pool;
}

std::vector<PairFrequency> simulate_engagement(const ModelParams& params, std::size_t n_events,
                                               std::uint64_t seed) {
  if (n_events < kMinEvents) {
    throw Error(ErrorCode::kDomain, "engagement simulation needs at least " +
                                        std::to_string(kMinEvents) + " events per pair");
  }
  validate(params);
  std::vector<PairFrequency> out;
  std::vector<double> buffer(kShockChunk);
  for (UserType reader : active_types(params)) {
    for (UserType creator : active_types(params)) {
      const double mu = deterministic_utility(reader, creator, params);
      const std::uint64_t stream = kEngagementStreamBase + 8 * reader.index() + creator.index();
      PairFrequency f{reader, creator, n_events, 0, 0};
      for (std::size_t first = 0; first < n_events; first += kShockChunk) {
        const std::size_t len = std::min(kShockChunk, n_events - first);
        std::span<double> chunk(buffer.data(), len);
        rng::fill_shocks(seed, stream, first, chunk);
        const auto c = kernels::tally_engagement(chunk, mu, params.gamma);
        f.likes += c.likes;
        f.dislikes += c.dislikes;
      }
      out.push_back(f);
    }
  }
  return out;
}

double agreement_tolerance(std::size_t count) {
  if (count == 0) return 1.0;
  return std::max(0.01, 5.0 * std::sqrt(0.25 / static_cast<double>(count)));
}

SimulationReport simulate_equilibrium(const AgentPool& pool, const ModelParams& params,
                                      std::size_t max_rounds) {
  if (stratified_counts(params, pool.size) != pool.counts) {
    throw Error(ErrorCode::kDomain, "agent pool was sampled under different parameters");
  }
  const auto inc = creator_incentives(params);
  const double n = static_cast<double>(pool.size);
  const auto active = active_types(params);

  SimulationReport rep;
  rep.seed = pool.seed;
  rep.agents = pool.size;
  rep.counts = pool.counts;

  std::vector<std::uint8_t> created(pool.size, 0);
  std::vector<std::uint8_t> want(pool.size, 0);
  const auto flags = [&](std::vector<std::uint8_t>& v, std::size_t k) {
    return std::span<std::uint8_t>(v).subspan(pool.offsets[k], pool.counts[k]);
  };
  const auto realized_supply = [&] {
    double v = 0.0;
    for (UserType t : active) {
      const std::size_t k = t.index();
      const auto block = flags(created, k);
      const auto on = static_cast<double>(std::count(block.begin(), block.end(), std::uint8_t{1}));
      v += inc.survival[k] * on;
    }
    return v / n;
  };

  // Round 0: everyone best-responds to the common belief.
  const double belief = 0.5;
  for (UserType t : active) {
    const std::size_t k = t.index();
    const double u = inc.survival[k] * (reach(belief, params.reach) * inc.engagement[k]);
    kernels::best_response(pool.block(t), u, u, flags(created, k), flags(created, k));
  }
  double supply = realized_supply();
  rep.trajectory.push_back(supply);

  bool inertial = false;
  while (rep.rounds < max_rounds) {
    ++rep.rounds;
    const double r_on = reach(supply, params.reach);
    std::size_t changed = 0;
    for (UserType t : active) {
      const std::size_t k = t.index();
      const double s = inc.survival[k];
      const double r_off = reach(std::min(1.0, supply + s / n), params.reach);
      const auto c = kernels::best_response(pool.block(t), s * (r_on * inc.engagement[k]),
                                            s * (r_off * inc.engagement[k]), flags(created, k),
                                            inertial ? flags(want, k) : flags(created, k));
      changed += c.changed;
    }
    if (changed == 0) {
      rep.converged = true;
      break;
    }
    if (inertial) {
      ++rep.inertial_rounds;
      for (std::size_t i = 0; i < pool.size; ++i) {
        if (rng::counter_bits(pool.seed, kInertiaStreamBase + rep.rounds, i) & 1u) {
          created[i] = want[i];
        }
      }
    }
    const double next = realized_supply();
    if (!inertial &&
        std::find(rep.trajectory.begin(), rep.trajectory.end(), next) != rep.trajectory.end()) {
      rep.cycle_detected = true;
      inertial = true;
    }
    rep.trajectory.push_back(next);
    supply = next;
  }

  const auto eq = equilibrium(params);
  rep.empirical_supply = supply;
  rep.analytic_supply = eq.supply;
  rep.within_tolerance = rep.converged;
  for (UserType t : active) {
    const std::size_t k = t.index();
    rep.analytic_pc[k] = eq.pc[k];
    if (pool.counts[k] == 0) continue;
    const auto block = flags(created, k);
    const auto on = static_cast<double>(std::count(block.begin(), block.end(), std::uint8_t{1}));
    rep.empirical_pc[k] = on / static_cast<double>(pool.counts[k]);
    rep.deviation[k] = std::abs(rep.empirical_pc[k] - rep.analytic_pc[k]);
    rep.max_deviation = std::max(rep.max_deviation, rep.deviation[k]);
    if (rep.deviation[k] > agreement_tolerance(pool.counts[k])) rep.within_tolerance = false;
  }
  return rep;
}

}  // namespace modgame
