#include <cmath>

#include "doctest.h"
#include "modgame/equilibrium.hpp"
#include "support.hpp"

using namespace modgame;
using modgame::testing::make;
using modgame::testing::near;

namespace {

// Independent test-side root finder: plain bisection on h(V) = g(V) - V with
// g rebuilt from per-type engagement values.
double bisect_supply(const ModelParams& p, const TypeArray<double>& engagement) {
  const auto m = population_masses(p);
  const auto g = [&](double v) {
    double s = 0.0;
    for (UserType t : active_types(p)) {
      const double surv = t.toxic() ? 1.0 - p.beta : 1.0;
      const double pc = std::clamp((1.0 + surv * reach(v, p.reach) * engagement[t.index()]) / 2.0, 0.0, 1.0);
      s += m[t] * surv * pc;
    }
    return s - v;
  };
  double lo = 0.0;
  double hi = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("worked case with no polarization and no moderation") {
  const ModelParams p = make(0.0, 0.0, 0.0);
  for (const auto& eq : {closed_form_equilibrium(p), solve_equilibrium(p), equilibrium(p)}) {
    CHECK(near(eq.supply, 3.0 / 7.0, 1e-12));
    CHECK(near(eq[types::kANT], 4.0 / 7.0, 1e-12));
    CHECK(near(eq[types::kBNT], 4.0 / 7.0, 1e-12));
    CHECK(near(eq[types::kAT], 2.0 / 7.0, 1e-12));
    CHECK(near(eq[types::kBT], 2.0 / 7.0, 1e-12));
    CHECK(eq.residual <= 1e-12);
  }
  CHECK(closed_form_equilibrium(p).solver == SolverKind::kClosedForm);
  CHECK(solve_equilibrium(p).solver == SolverKind::kIterative);
}

TEST_CASE("worked case with full moderation") {
  const ModelParams p = make(0.5, 0.1, 1.0);
  for (const auto& eq : {closed_form_equilibrium(p), solve_equilibrium(p)}) {
    CHECK(near(eq.supply, 51.0 / 201.0, 1e-12));
    CHECK(near(eq[types::kANT], 417.0 / 804.0, 1e-12));
    CHECK(near(eq[types::kBNT], 387.0 / 804.0, 1e-12));
    CHECK(eq[types::kAT] == 0.5);
    CHECK(eq[types::kBT] == 0.5);
    CHECK(eq.surviving(Ideology::kA) == 0.0);
    CHECK(eq.surviving(Ideology::kB) == 0.0);
  }
}

TEST_CASE("balanced groups create symmetrically") {
  for (double alpha : {0.0, 0.3, 0.8}) {
    for (double beta : {0.0, 0.4, 1.0}) {
      const auto eq = equilibrium(make(alpha, 0.0, beta));
      CHECK(near(eq[types::kANT], eq[types::kBNT], 1e-15));
      CHECK(near(eq[types::kAT], eq[types::kBT], 1e-15));
    }
  }
}

TEST_CASE("inverse reach regression") {
  ModelParams p = make(0.0, 0.0, 0.0);
  p.reach.kind = ReachKind::kInverse;
  const auto eq = equilibrium(p);
  CHECK(eq.solver == SolverKind::kIterative);
  CHECK(eq.residual <= 1e-12);
  CHECK(eq.supply > 0.0);
  CHECK(eq.supply < 1.0);
  // V = 1/2 - 1/(8(1+V)) here, i.e. V = (sqrt 7 - 1)/4.
  TypeArray<double> e{-0.75, 0.25, -0.75, 0.25, 0.0};
  CHECK(near(eq.supply, bisect_supply(p, e), 1e-12));
  CHECK(near(eq.supply, (std::sqrt(7.0) - 1.0) / 4.0, 1e-12));
  CHECK(near(eq.supply, 0.41143782776614768, 1e-15));
  CHECK(find_all_fixed_points(p, 1000).size() == 1);
}

TEST_CASE("full personalization drops out-group engagement") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    ModelParams p = random_params(rng, Personalization{1.0});
    p.variant = Personalization{1.0};
    TypeArray<double> e{};
    for (UserType t : types::kPartisan) e[t.index()] = net_engagement(t, p).ne_in;
    const auto eq = equilibrium(p);
    CHECK(near(eq.supply, bisect_supply(p, e), 1e-12));
  }
}

TEST_CASE("closed form and iterative solver agree across variants and reach shapes") {
  for (const auto& base : modgame::testing::sample(60, 8)) {
    for (ReachKind kind : {ReachKind::kLinear, ReachKind::kInverse, ReachKind::kExponential, ReachKind::kLogistic}) {
      ModelParams p = base;
      p.reach.kind = kind;
      const auto eq = equilibrium(p);
      CHECK(eq.residual <= kResidualContract);
      const auto inc = creator_incentives(p);
      CHECK(near(eq.supply, bisect_supply(p, inc.engagement), 1e-11));
      CHECK(find_all_fixed_points(p, 1000).size() == 1);
      if (kind == ReachKind::kLinear) {
        const auto iter = solve_equilibrium(p);
        CHECK(near(eq.supply, iter.supply, 1e-12));
      }
    }
  }
}

TEST_CASE("creation probabilities are consistent with the supply they produce") {
  for (const auto& p : modgame::testing::sample(50, 9)) {
    const auto eq = equilibrium(p);
    for (UserType t : active_types(p)) {
      CHECK(eq[t] >= 0.0);
      CHECK(eq[t] <= 1.0);
      CHECK(near(eq[t], creation_probability(t, eq.supply, p), 1e-12));
    }
    CHECK(near(content_supply(eq.pc, p), eq.supply, 1e-10));
  }
}

TEST_CASE("fixed point scan") {
  auto roots = find_all_fixed_points(make(0.0, 0.0, 0.0), 1000);
  REQUIRE(roots.size() == 1);
  CHECK(near(roots[0], 3.0 / 7.0, 1e-12));
  roots = find_all_fixed_points(make(0.5, 0.1, 1.0), 1000);
  REQUIRE(roots.size() == 1);
  CHECK(near(roots[0], 0.2537313, 1e-7));
  CHECK_THROWS_AS(find_all_fixed_points(make(0.0, 0.0, 0.0), 999), Error);
}

TEST_CASE("closed form is restricted to linear reach") {
  ModelParams p;
  p.reach.kind = ReachKind::kExponential;
  CHECK_THROWS_AS(closed_form_equilibrium(p), Error);
  p.alpha = 2.0;
  CHECK_THROWS_AS(equilibrium(p), Error);
}
