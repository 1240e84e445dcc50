#include <cmath>

#include "doctest.h"
#include "modgame/oracle.hpp"
#include "modgame/report.hpp"
#include "modgame/rng.hpp"
#include "support.hpp"

using namespace modgame;
using modgame::testing::make;
using modgame::testing::near;

TEST_CASE("counter-based shocks") {
  double sum = 0.0;
  double lo = 1.0;
  double hi = -1.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double e = rng::uniform_shock(42, 7, i);
    sum += e;
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  CHECK(lo >= -1.0);
  CHECK(hi < 1.0);
  CHECK(std::abs(sum / kDraws) < 5.0 * std::sqrt(1.0 / 3.0 / kDraws));
  CHECK(rng::uniform_shock(42, 7, 123) == rng::uniform_shock(42, 7, 123));
  CHECK(rng::uniform_shock(42, 7, 123) != rng::uniform_shock(43, 7, 123));
  CHECK(rng::uniform_shock(42, 7, 123) != rng::uniform_shock(42, 8, 123));
  CHECK(rng::unit(0) == 0.0);
  CHECK(rng::unit(~0ull) < 1.0);
}

TEST_CASE("stratified populations") {
  auto pool = sample_population(make(0.0, 0.0, 0.0), 100000, 42);
  for (UserType t : types::kPartisan) CHECK(pool.counts[t.index()] == 25000);
  pool = sample_population(make(0.0, 0.1, 0.0), 100000, 42);
  CHECK(pool.counts[types::kAT.index()] == 25000);
  CHECK(pool.counts[types::kANT.index()] == 35000);
  CHECK(pool.counts[types::kBT.index()] == 25000);
  CHECK(pool.counts[types::kBNT.index()] == 15000);
  CHECK(pool.type_of(24999) == types::kAT);
  CHECK(pool.type_of(25000) == types::kANT);
  CHECK(pool.type_of(99999) == types::kBNT);

  const auto again = sample_population(make(0.0, 0.1, 0.0), 100000, 42);
  CHECK(again.shocks == pool.shocks);
  CHECK(again.counts == pool.counts);

  for (const auto& p : modgame::testing::sample(20, 12)) {
    const auto counts = stratified_counts(p, 12345);
    std::size_t total = 0;
    for (auto c : counts) total += c;
    CHECK(total == 12345);
  }
  CHECK_THROWS_AS(sample_population(make(0.0, 0.0, 0.0), 999, 1), Error);
}

TEST_CASE("engagement frequencies") {
  const ModelParams p = make(0.4, 0.0, 0.0);
  const auto freqs = simulate_engagement(p, 1000000, 42);
  CHECK(freqs.size() == 16);
  for (const auto& f : freqs) {
    const auto want = engagement_probs(f.reader, f.creator, p);
    if (f.reader.ideology() == Ideology::kA && f.creator == types::kANT) {
      CHECK(near(f.p_like(), 0.5, 0.002));
      CHECK(near(f.p_dislike(), 0.25, 0.002));
    }
    if (f.reader.ideology() == Ideology::kB && f.creator == types::kAT) {
      CHECK(f.likes == 0);
    }
    CHECK(std::abs(f.p_like() - want.like) <= 4.0 * std::sqrt(want.like * (1 - want.like) / 1e6) + 1e-12);
  }

  ModelParams h = make(0.5, 0.0, 0.0);
  h.variant = ToxicityHomophily{0.5};
  for (const auto& f : simulate_engagement(h, 1000000, 42)) {
    if (f.reader == types::kAT && f.creator == types::kAT) {
      CHECK(near(f.p_like(), 0.375, 0.002));
      CHECK(near(f.p_dislike(), 0.375, 0.002));
    }
  }
  CHECK_THROWS_AS(simulate_engagement(p, 99999, 42), Error);
}

TEST_CASE("agent equilibrium at the worked cases") {
  ModelParams p = make(0.0, 0.0, 0.0);
  auto rep = simulate_equilibrium(sample_population(p, 100000, 42), p);
  CHECK(rep.converged);
  CHECK(near(rep.empirical_pc[types::kANT.index()], 4.0 / 7.0, 0.01));
  CHECK(near(rep.empirical_pc[types::kBNT.index()], 4.0 / 7.0, 0.01));
  CHECK(near(rep.empirical_pc[types::kAT.index()], 2.0 / 7.0, 0.01));
  CHECK(near(rep.empirical_supply, 3.0 / 7.0, 0.01));

  p = make(0.5, 0.1, 1.0);
  rep = simulate_equilibrium(sample_population(p, 100000, 42), p);
  CHECK(rep.converged);
  CHECK(near(rep.empirical_pc[types::kAT.index()], 0.5, 0.01));
  CHECK(near(rep.empirical_pc[types::kBT.index()], 0.5, 0.01));
  CHECK(near(rep.empirical_supply, rep.analytic_supply, 0.01));
}

TEST_CASE("agent equilibrium tracks the analytic one") {
  for (const auto& p : modgame::testing::sample(4, 13)) {
    const auto rep = simulate_equilibrium(sample_population(p, 20000, 5), p);
    CHECK(rep.converged);
    CHECK(rep.within_tolerance);
    CHECK(near(rep.empirical_supply, rep.analytic_supply, 0.02));
  }
}

TEST_CASE("simulation reports are deterministic") {
  ModelParams p = make(0.6, 0.2, 0.3);
  p.variant = NeutralUsers{0.3};
  const auto a = to_json(simulate_equilibrium(sample_population(p, 50000, 9), p)).dump();
  const auto b = to_json(simulate_equilibrium(sample_population(p, 50000, 9), p)).dump();
  CHECK(a == b);
}

TEST_CASE("pool must match the parameters") {
  const auto pool = sample_population(make(0.0, 0.1, 0.0), 10000, 1);
  CHECK_THROWS_AS(simulate_equilibrium(pool, make(0.0, 0.0, 0.0)), Error);
}

TEST_CASE("agreement tolerance") {
  CHECK(agreement_tolerance(1000000) == 0.01);
  CHECK(near(agreement_tolerance(100), 0.25, 1e-15));
}
