#include <cmath>

#include "doctest.h"
#include "modgame/equilibrium.hpp"
#include "support.hpp"

using namespace modgame;
using modgame::testing::make;
using modgame::testing::near;

TEST_CASE("population masses") {
  ModelParams p = make(0.0, 0.1, 0.0);
  auto m = population_masses(p);
  CHECK(near(m[types::kAT], 0.25, 1e-15));
  CHECK(near(m[types::kANT], 0.35, 1e-15));
  CHECK(near(m[types::kBT], 0.25, 1e-15));
  CHECK(near(m[types::kBNT], 0.15, 1e-15));
  CHECK(m[types::kNNT] == 0.0);

  m = population_masses(make(0.0, 0.0, 0.0));
  for (UserType t : types::kPartisan) CHECK(m[t] == 0.25);

  p.variant = NeutralUsers{0.5};
  m = population_masses(p);
  CHECK(near(m[types::kNNT], 0.5, 1e-15));
  CHECK(near(m[types::kAT], 0.125, 1e-15));
  CHECK(near(m[types::kANT], 0.175, 1e-15));
  CHECK(near(m[types::kBT], 0.125, 1e-15));
  CHECK(near(m[types::kBNT], 0.075, 1e-15));
}

TEST_CASE("masses sum to one and stay non-negative") {
  for (const auto& p : modgame::testing::sample(200, 1)) {
    const auto m = population_masses(p);
    double total = 0.0;
    for (double v : m.mass) {
      CHECK(v >= 0.0);
      total += v;
    }
    CHECK(near(total, 1.0, 1e-14));
    CHECK(near(m.group(Ideology::kA) + m.group(Ideology::kB) + m.group(Ideology::kN), 1.0, 1e-14));
  }
}

TEST_CASE("deterministic utility") {
  for (double alpha : {0.0, 0.3, 0.7, 1.0}) {
    const ModelParams p = make(alpha, 0.0, 0.0);
    CHECK(deterministic_utility(types::kANT, types::kANT, p) == 0.0);
    CHECK(deterministic_utility(types::kAT, types::kANT, p) == 0.0);
    CHECK(deterministic_utility(types::kBNT, types::kAT, p) == -1.0);
    CHECK(deterministic_utility(types::kBT, types::kAT, p) == -1.0);
  }
  ModelParams h = make(0.5, 0.0, 0.0);
  h.variant = ToxicityHomophily{0.5};
  CHECK(near(deterministic_utility(types::kAT, types::kAT, h), -0.25, 1e-15));
  // Non-toxic readers do not share the taste.
  CHECK(near(deterministic_utility(types::kANT, types::kAT, h), -0.5, 1e-15));
}

TEST_CASE("engagement probabilities") {
  ModelParams p = make(0.6, 0.0, 0.0);
  auto e = engagement_probs(types::kANT, types::kAT, p);
  CHECK(near(e.like, 0.3, 1e-15));
  CHECK(near(e.dislike, 0.45, 1e-15));
  e = engagement_probs(types::kBT, types::kBNT, p);
  CHECK(e.like == 0.5);
  CHECK(e.dislike == 0.25);

  p.variant = NeutralUsers{0.5};
  e = engagement_probs(types::kNNT, types::kANT, p);
  CHECK(e.like == 0.5);
  CHECK(e.dislike == 0.25);

  // Neutral readers do not exist in the baseline.
  CHECK_THROWS_AS(engagement_probs(types::kNNT, types::kANT, make(0.6, 0.0, 0.0)), Error);
}

TEST_CASE("engagement probabilities are probabilities") {
  for (const auto& p : modgame::testing::sample(100, 2)) {
    for (UserType r : active_types(p)) {
      for (UserType c : active_types(p)) {
        const auto e = engagement_probs(r, c, p);
        CHECK(e.like >= 0.0);
        CHECK(e.dislike >= 0.0);
        CHECK(e.like + e.dislike <= 1.0 + 1e-15);
      }
    }
  }
}

TEST_CASE("net engagement") {
  auto ne = net_engagement(types::kANT, make(0.0, 0.0, 0.0));
  CHECK(near(ne.ne_in, 0.125, 1e-15));
  CHECK(near(ne.ne_out, 0.125, 1e-15));
  CHECK(near(ne.total, 0.25, 1e-15));

  const ModelParams p = make(0.5, 0.1, 0.0);
  ne = net_engagement(types::kANT, p);
  CHECK(near(ne.ne_in, 0.15, 1e-15));
  CHECK(near(ne.ne_out, -0.10, 1e-15));
  CHECK(near(ne.total, 0.05, 1e-15));
  CHECK(near(net_engagement(types::kBNT, p).total, -0.05, 1e-15));

  for (UserType t : {types::kAT, types::kBT}) {
    CHECK(near(net_engagement(t, make(0.0, 0.0, 0.0)).total, -0.75, 1e-15));
  }
}

TEST_CASE("non-toxic net engagement matches its closed form") {
  // NE(i,NT) = (2 + w)/4 - m_{-i} alpha (1 - w)/2 and NE(i,T) = 3w/4 + m_i alpha (1 - w)/2
  std::mt19937_64 rng(3);
  for (int k = 0; k < 500; ++k) {
    const ModelParams p = random_params(rng, Baseline{});
    const double w = p.omega;
    const double ma = 0.5 + p.delta;
    const double mb = 0.5 - p.delta;
    // Toxic closed form needs gamma = 1/2 for the 3/4 dislike cell.
    ModelParams q = p;
    q.gamma = 0.5;
    CHECK(near(net_engagement(types::kANT, q).total, (2 + w) / 4 - mb * p.alpha * (1 - w) / 2, 1e-14));
    CHECK(near(net_engagement(types::kBNT, q).total, (2 + w) / 4 - ma * p.alpha * (1 - w) / 2, 1e-14));
    CHECK(near(net_engagement(types::kAT, q).total, 3 * w / 4 + ma * p.alpha * (1 - w) / 2, 1e-14));
    CHECK(near(net_engagement(types::kBT, q).total, 3 * w / 4 + mb * p.alpha * (1 - w) / 2, 1e-14));
  }
}

TEST_CASE("creation probability") {
  const ModelParams p = make(0.0, 0.0, 0.0);
  CHECK(near(creation_probability(types::kANT, 3.0 / 7.0, p), 4.0 / 7.0, 1e-15));
  CHECK(near(creation_probability(types::kAT, 3.0 / 7.0, p), 2.0 / 7.0, 1e-15));
  for (double v : {0.0, 0.3, 1.0}) {
    CHECK(creation_probability(types::kAT, v, make(0.4, 0.1, 1.0)) == 0.5);
  }
  CHECK_THROWS_AS(creation_probability(types::kAT, 1.5, p), Error);
}

TEST_CASE("content supply") {
  const ModelParams p = make(0.0, 0.0, 0.0);
  CHECK(content_supply(TypeArray<double>{}, p) == 0.0);
  TypeArray<double> pc{2.0 / 7.0, 4.0 / 7.0, 2.0 / 7.0, 4.0 / 7.0, 0.0};
  CHECK(near(content_supply(pc, p), 3.0 / 7.0, 1e-15));

  const ModelParams q = make(0.5, 0.1, 1.0);
  pc = {0.5, 417.0 / 804.0, 0.5, 387.0 / 804.0, 0.0};
  CHECK(near(content_supply(pc, q), 51.0 / 201.0, 1e-15));
  pc[1] = 1.2;
  CHECK_THROWS_AS(content_supply(pc, q), Error);
}

TEST_CASE("reach functions") {
  ReachFunction rf;
  CHECK(near(reach(3.0 / 7.0, rf), 4.0 / 7.0, 1e-15));
  rf.kind = ReachKind::kInverse;
  CHECK(reach(0.0, rf) == 1.0);
  rf.kind = ReachKind::kExponential;
  CHECK(near(reach(1.0, rf), 0.3678794, 1e-7));
  rf.kind = ReachKind::kLogistic;
  CHECK(near(reach(0.0, rf), 1.0, 1e-15));
  for (ReachKind kind : {ReachKind::kLinear, ReachKind::kInverse, ReachKind::kExponential, ReachKind::kLogistic}) {
    rf.kind = kind;
    double prev = reach(0.0, rf);
    for (int k = 1; k <= 100; ++k) {
      const double r = reach(k / 100.0, rf);
      CHECK(r < prev);
      CHECK(r > -1e-15);
      CHECK(reach_slope(k / 100.0, rf) < 0.0);
      prev = r;
    }
  }
  CHECK_THROWS_AS(reach(-0.1, rf), Error);
}

TEST_CASE("alpha = 0 removes ideology from engagement") {
  ModelParams p = make(0.0, 0.2, 0.3);
  p.tau_a = 0.4;
  for (UserType c : types::kPartisan) {
    for (UserType r : types::kPartisan) {
      const auto e = engagement_probs(r, c, p);
      const auto same = engagement_probs(UserType{c.ideology(), r.toxicity()}, c, p);
      CHECK(e.like == same.like);
      CHECK(e.dislike == same.dislike);
    }
  }
}

TEST_CASE("relabelling the groups mirrors every quantity") {
  for (const auto& p : modgame::testing::sample(40, 4)) {
    const ModelParams q = modgame::testing::mirrored(p);
    const auto mp = population_masses(p);
    const auto mq = population_masses(q);
    for (UserType t : active_types(p)) {
      const UserType s = modgame::testing::swap_group(t);
      CHECK(near(mp[t], mq[s], 1e-15));
      CHECK(near(net_engagement(t, p).total, net_engagement(s, q).total, 1e-14));
    }
  }
}

TEST_CASE("variant reductions") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const ModelParams base = random_params(rng, Baseline{});
    ModelParams pers = base;
    pers.variant = Personalization{0.0};
    const auto a = creator_incentives(base);
    const auto b = creator_incentives(pers);
    for (UserType t : types::kPartisan) {
      // Bit-for-bit: both paths evaluate the same expression tree.
      CHECK(a.engagement[t.index()] == b.engagement[t.index()]);
    }

    // Reversing omega for toxic creators leaves non-toxic incentives alone.
    ModelParams loving = base;
    loving.variant = NegativeEngagementLoving{};
    const auto c = creator_incentives(loving);
    CHECK(c.engagement[types::kANT.index()] == a.engagement[types::kANT.index()]);
    CHECK(c.engagement[types::kBNT.index()] == a.engagement[types::kBNT.index()]);
    CHECK(c.engagement[types::kAT.index()] >= a.engagement[types::kAT.index()]);

    // Vanishing homophily approaches the baseline.
    ModelParams homo = base;
    homo.variant = ToxicityHomophily{1e-9};
    const auto d = creator_incentives(homo);
    for (UserType t : types::kPartisan) {
      CHECK(near(d.engagement[t.index()], a.engagement[t.index()], 1e-8));
    }
  }
}

TEST_CASE("parameter validation reports every field") {
  ModelParams p;
  p.alpha = 1.5;
  p.gamma = 0.0;
  p.omega = 0.2;
  const auto errors = validation_errors(p, "params.");
  CHECK(errors.size() == 3);
  bool saw_alpha = false;
  for (const auto& e : errors) saw_alpha |= e.rfind("params.alpha", 0) == 0;
  CHECK(saw_alpha);
  try {
    validate(p);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidParameters);
    CHECK(e.details().size() == 3);
  }

  ModelParams q;
  q.x = 0.6;
  q.tau_a = 0.95;  // 0.57 toxic A mass exceeds the group's 0.5
  CHECK_FALSE(validation_errors(q).empty());
  q.variant = Personalization{1.5};
  CHECK(validation_errors(q).size() == 2);
}

TEST_CASE("variant-specific parameters need their variant") {
  ModelParams p;
  CHECK_THROWS_AS(get(p, Parameter::kPhi), Error);
  CHECK_THROWS_AS(set(p, Parameter::kKappa, 0.2), Error);
  p.variant = Personalization{0.3};
  CHECK(get(p, Parameter::kPhi) == 0.3);
  CHECK(get(with(p, Parameter::kPhi, 0.7), Parameter::kPhi) == 0.7);
  CHECK(parse_parameter("lambda_n") == Parameter::kLambdaN);
  CHECK_THROWS_AS(parse_parameter("lambda"), Error);
  CHECK(to_string(types::kBNT) == "B_NT");
  CHECK(parse_user_type("N_NT") == types::kNNT);
  CHECK_THROWS_AS(UserType(Ideology::kN, Toxicity::kToxic), Error);
}
