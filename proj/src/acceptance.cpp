#include "modgame/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "modgame/equilibrium.hpp"
#include "modgame/oracle.hpp"
#include "modgame/statics.hpp"
#include "modgame/welfare.hpp"

namespace modgame {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Counts checks and keeps the first failure message.
class Tally {
 public:
  template <class Msg>
  void expect(bool ok, Msg&& message) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = message();
  }

  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : ", ") + text; }

  bool passed() const { return failures_ == 0 && checks_ > 0; }

  std::string detail() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_ > 0) out << ", " << failures_ << " failed; first: " << first_;
    if (!notes_.empty()) out << "; " << notes_;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::string notes_;
};

std::string describe(const ModelParams& p) {
  std::ostringstream out;
  out.precision(6);
  out << variant_name(p.variant) << "(alpha=" << p.alpha << " delta=" << p.delta << " x=" << p.x
      << " tau_a=" << p.tau_a << " beta=" << p.beta << " omega=" << p.omega
      << " gamma=" << p.gamma;
  if (auto* v = std::get_if<Personalization>(&p.variant)) out << " phi=" << v->phi;
  if (auto* v = std::get_if<NeutralUsers>(&p.variant)) out << " lambda_n=" << v->lambda_n;
  if (auto* v = std::get_if<ToxicityHomophily>(&p.variant)) out << " kappa=" << v->kappa;
  out << " reach=" << to_string(p.reach.kind) << ")";
  return out.str();
}

std::string num(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

double linspace(std::size_t i, std::size_t n, double lo, double hi) {
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

int sign_of(double v, double floor = kDerivativeNoiseFloor) {
  if (std::abs(v) <= floor) return 0;
  return v > 0 ? 1 : -1;
}

ModelParams figure_params(double delta, double alpha, double beta) {
  ModelParams p;
  p.delta = delta;
  p.alpha = alpha;
  p.beta = beta;
  return p;
}

double surviving_toxic_of(const ModelParams& p, Ideology group) {
  return equilibrium(p).surviving(group);
}

// Closed-form Table-of-probabilities cell for partisan readers and creators.
EngagementProbabilities table_cell(Ideology reader, UserType creator, double alpha) {
  const bool same = reader == creator.ideology();
  if (!creator.toxic()) {
    return same ? EngagementProbabilities{0.5, 0.25}
                : EngagementProbabilities{(1.0 - alpha) / 2.0, (1.0 + 2.0 * alpha) / 4.0};
  }
  return same ? EngagementProbabilities{alpha / 2.0, (3.0 - 2.0 * alpha) / 4.0}
              : EngagementProbabilities{0.0, 0.75};
}

// --- criteria ---------------------------------------------------------------

Tally engagement_exactness(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    ModelParams p;
    p.alpha = unit(rng);
    for (UserType reader : types::kPartisan) {
      for (UserType creator : types::kPartisan) {
        const auto got = engagement_probs(reader, creator, p);
        const auto want = table_cell(reader.ideology(), creator, p.alpha);
        const double err = std::max(std::abs(got.like - want.like),
                                    std::abs(got.dislike - want.dislike));
        worst = std::max(worst, err);
        t.expect(err <= 1e-15, [&] {
          return to_string(reader) + " on " + to_string(creator) + " alpha=" + num(p.alpha) +
                 " err=" + num(err);
        });
      }
    }
  }
  t.note("max table error " + num(worst));

  constexpr std::size_t kEvents = 1000000;
  double worst_sigma = 0.0;
  for (const VariantSpec& v : all_variants()) {
    ModelParams p;
    p.alpha = 0.5;
    p.delta = 0.1;
    p.variant = v;
    for (const auto& f : simulate_engagement(p, kEvents, seed)) {
      const auto want = engagement_probs(f.reader, f.creator, p);
      const auto check = [&](double prob, double freq, const char* what) {
        const double n = static_cast<double>(f.events);
        const double sigma = std::sqrt(prob * (1.0 - prob) / n);
        const double diff = std::abs(freq - prob);
        if (sigma > 0.0) worst_sigma = std::max(worst_sigma, diff / sigma);
        t.expect(sigma > 0.0 ? diff <= 4.0 * sigma : diff == 0.0, [&] {
          return std::string(variant_name(v)) + " " + to_string(f.reader) + " on " +
                 to_string(f.creator) + " " + what + " freq=" + num(freq) + " p=" + num(prob);
        });
      };
      check(want.like, f.p_like(), "like");
      check(want.dislike, f.p_dislike(), "dislike");
    }
  }
  t.note("max Monte Carlo deviation " + num(worst_sigma) + " sigma");
  return t;
}

Tally solver_cross_validation(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const ModelParams p = random_params(rng, Baseline{});
    const auto closed = closed_form_equilibrium(p);
    const auto iter = solve_equilibrium(p);
    double err = std::abs(closed.supply - iter.supply);
    for (std::size_t i = 0; i < kTypeCount; ++i) err = std::max(err, std::abs(closed.pc[i] - iter.pc[i]));
    worst = std::max(worst, err);
    t.expect(err <= 1e-12, [&] { return describe(p) + " disagreement " + num(err); });
    const auto roots = find_all_fixed_points(p, 1000);
    t.expect(roots.size() == 1 && std::abs(roots[0] - closed.supply) <= 1e-9, [&] {
      return describe(p) + " found " + std::to_string(roots.size()) + " fixed points";
    });
  }
  t.note("max solver gap " + num(worst));
  return t;
}

Tally worked_case(std::uint64_t) {
  Tally t;
  const ModelParams p;  // alpha = delta = beta = 0, omega = -1, x = tau_a = 1/2
  for (const auto& eq : {closed_form_equilibrium(p), solve_equilibrium(p)}) {
    const std::string who(to_string(eq.solver));
    const auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
    t.expect(near(eq.supply, 3.0 / 7.0), [&] { return who + " V=" + num(eq.supply); });
    for (UserType c : types::kPartisan) {
      const double want = c.toxic() ? 2.0 / 7.0 : 4.0 / 7.0;
      t.expect(near(eq[c], want), [&] { return who + " pc(" + to_string(c) + ")=" + num(eq[c]); });
    }
  }
  return t;
}

Tally symmetric_lemma(std::uint64_t) {
  Tally t;
  for (double omega : {-1.0, -0.5, -0.1}) {
    for (std::size_t k = 0; k < 21; ++k) {
      ModelParams p = figure_params(0.0, 0.0, linspace(k, 21, 0.0, 1.0));
      p.omega = omega;
      for (Ideology g : {Ideology::kA, Ideology::kB}) {
        const UserType civil{g, Toxicity::kNonToxic};
        const double d_civil = dpc_dbeta(p, civil);
        const double d_toxic = derivative(p, Parameter::kBeta, [g](const ModelParams& q) {
          return surviving_toxic_of(q, g);
        });
        t.expect(d_civil > 0.0, [&] { return describe(p) + " d pc(" + to_string(civil) + ") = " + num(d_civil); });
        t.expect(d_toxic < 0.0, [&] { return describe(p) + " d surviving toxic " + std::string(to_string(g)) + " = " + num(d_toxic); });
      }
    }
  }
  const double alpha_1 = thresholds_baseline(-1.0, 0.0).alpha_1;
  t.expect(alpha_1 == 0.5, [&] { return "alpha_1(-1) = " + num(alpha_1); });
  for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    for (UserType civil : {types::kANT, types::kBNT}) {
      const auto slope = [&](double alpha) { return dpc_dbeta(figure_params(0.0, alpha, beta), civil); };
      const auto root = locate_sign_change(slope, 0.0, 1.0);
      t.expect(root && std::abs(*root - 0.5) <= 1e-3, [&] {
        return to_string(civil) + " beta=" + num(beta) + " flip at " + (root ? num(*root) : "none");
      });
      t.expect(slope(0.499) > 0.0 && slope(0.501) < 0.0,
               [&] { return to_string(civil) + " beta=" + num(beta) + " no sign flip across 0.5"; });
    }
  }
  return t;
}

Tally figure2_regions(std::uint64_t) {
  Tally t;
  for (double tau : {0.2, 0.5, 0.8}) {
    ModelParams p;
    p.tau_a = tau;
    p.beta = 0.5;
    const auto map = region_map(SweepGrid{}, p);
    t.expect(map.compared > 0, [&] { return "tau_a=" + num(tau) + " has no comparable cells"; });
    t.expect(map.disagreements == 0, [&] {
      for (const auto& c : map.cells) {
        if (c.admissible && c.boundary_distance > kRegionBand && c.analytic != c.numeric) {
          return "tau_a=" + num(tau) + " delta=" + num(c.x) + " alpha=" + num(c.y) +
                 " analytic " + std::string(to_string(c.analytic)) + " numeric " +
                 std::string(to_string(c.numeric));
        }
      }
      return std::string("?");
    });
    t.note("tau_a=" + num(tau) + ": " + std::to_string(map.compared) + " cells");
  }
  return t;
}

Tally toxic_monotonicity(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (const VariantSpec& v : all_variants()) {
    for (int k = 0; k < 20; ++k) {
      ModelParams p = random_params(rng, v);
      std::array<double, 2> prev{kInfinity, kInfinity};
      for (std::size_t b = 0; b < 41; ++b) {
        p.beta = linspace(b, 41, 0.0, 1.0);
        const auto eq = equilibrium(p);
        for (std::size_t g = 0; g < 2; ++g) {
          t.expect(eq.surviving_toxic[g] <= prev[g] + 1e-12, [&] {
            return describe(p) + " surviving toxic rose to " + num(eq.surviving_toxic[g]);
          });
          prev[g] = eq.surviving_toxic[g];
        }
      }
    }
  }
  return t;
}

Tally welfare_gap_moderation(std::uint64_t) {
  Tally t;
  double smallest = kInfinity;
  for (double omega : {-1.0, -0.5}) {
    for (double x : {0.3, 0.5}) {
      for (std::size_t a = 1; a <= 10; ++a) {
        for (std::size_t d = 1; d <= 9; ++d) {
          for (std::size_t b = 0; b <= 10; ++b) {
            ModelParams p = figure_params(0.05 * d, 0.1 * a, 0.1 * b);
            p.omega = omega;
            p.x = x;
            if (!validation_errors(p).empty()) continue;
            const double g = welfare_gap_derivative(p, WelfareAxis::kBeta);
            smallest = std::min(smallest, g);
            t.expect(g > 0.0, [&] { return describe(p) + " d gap/d beta = " + num(g); });
          }
        }
      }
    }
  }
  for (std::size_t a = 0; a <= 10; ++a) {
    for (std::size_t b = 0; b <= 10; ++b) {
      const ModelParams p = figure_params(0.0, 0.1 * a, 0.1 * b);
      const double gap = welfare_gap(p);
      t.expect(std::abs(gap) <= 1e-8, [&] { return describe(p) + " gap = " + num(gap); });
    }
  }
  t.note("min derivative " + num(smallest));
  return t;
}

ModelParams personalized(double delta, double alpha, double beta, double phi) {
  ModelParams p = figure_params(delta, alpha, beta);
  p.variant = Personalization{phi};
  return p;
}

Tally personalization_statics(std::uint64_t) {
  Tally t;
  const auto th = std::get<PersonalizationThresholds>(thresholds_extensions(personalized(0.1, 0.5, 0.5, 0.0)));
  t.expect(std::abs(th.phi_lo - 0.5) <= 1e-15, [&] { return "phi threshold(-1, 0.1) = " + num(th.phi_lo); });

  for (double phi : {0.0, 0.1, 0.2, 0.3, 0.4}) {
    for (double alpha : {0.2, 0.6, 0.99}) {
      for (double beta : {0.2, 0.5, 0.8}) {
        const ModelParams p = personalized(0.1, alpha, beta, phi);
        const auto base = classify_region(figure_params(0.1, alpha, beta), ClassifyMode::kAnalytic);
        const auto got = classify_region(p, ClassifyMode::kNumeric);
        t.expect(got == base, [&] {
          return describe(p) + " " + std::string(to_string(got)) + " vs baseline " + std::string(to_string(base));
        });
      }
    }
    // All three regions survive below the threshold ...
    std::set<RegionLabel> seen;
    for (std::size_t a = 0; a < 101; ++a) {
      seen.insert(classify_region(personalized(0.1, 0.01 * a, 0.5, phi), ClassifyMode::kNumeric));
    }
    t.expect(seen.count(RegionLabel::kUniversalSuppression) && seen.count(RegionLabel::kPolarizedCreation) &&
                 seen.count(RegionLabel::kUniversalEmpowerment),
             [&] { return "phi=" + num(phi) + " lost a region"; });
  }
  // ... and suppression is gone above it.
  for (double phi : {0.55, 0.7, 0.9}) {
    for (std::size_t a = 0; a < 101; ++a) {
      const ModelParams p = personalized(0.1, 0.01 * a, 0.5, phi);
      const auto label = classify_region(p, ClassifyMode::kNumeric);
      t.expect(label != RegionLabel::kUniversalSuppression, [&] { return describe(p) + " still suppressed"; });
    }
  }

  // Non-toxic minority creation falls with phi at low alpha and rises at high alpha.
  const auto dphi_bnt = [](const ModelParams& p) {
    return derivative(p, Parameter::kPhi, [](const ModelParams& q) { return equilibrium(q)[types::kBNT]; });
  };
  for (double beta : {0.2, 0.5, 0.8}) {
    const ModelParams p = personalized(0.1, 0.5, beta, 0.2);
    const double low = dphi_bnt(with(p, Parameter::kAlpha, 0.05));
    const double high = dphi_bnt(with(p, Parameter::kAlpha, 0.95));
    const auto flip = personalization_alpha_threshold(p);
    t.expect(low < 0.0 && high > 0.0 && flip.has_value(), [&] {
      return describe(p) + " dpc(B,NT)/dphi low=" + num(low) + " high=" + num(high);
    });
    if (flip) t.note("beta=" + num(beta) + " alpha flip " + num(*flip));
  }
  // Surviving toxic minority content rises with phi when moderation is light.
  for (double beta : {0.0, 0.05, 0.1}) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      const ModelParams p = personalized(0.1, alpha, beta, 0.2);
      const double d = derivative(p, Parameter::kPhi, [](const ModelParams& q) {
        return (1.0 - q.beta) * equilibrium(q)[types::kBT];
      });
      t.expect(d > 0.0, [&] { return describe(p) + " d surviving B,T / dphi = " + num(d); });
    }
  }
  return t;
}

ModelParams with_neutral(double delta, double alpha, double beta, double lambda_n) {
  ModelParams p = figure_params(delta, alpha, beta);
  p.variant = NeutralUsers{lambda_n};
  return p;
}

Tally neutral_users_statics(std::uint64_t) {
  Tally t;
  const auto th = std::get<NeutralThresholds>(thresholds_extensions(with_neutral(0.0, 0.5, 0.5, 0.5)));
  t.expect(th.lambda_0 == 0.5, [&] { return "lambda_0(-1) = " + num(th.lambda_0); });

  for (double alpha : {0.2, 0.5, 0.8}) {
    for (double delta : {0.0, 0.1}) {
      for (double beta : {0.2, 0.5, 0.8}) {
        const auto slope = [&](double lambda_n) {
          return dpc_dbeta(with_neutral(delta, alpha, beta, lambda_n), types::kNNT);
        };
        const double below = slope(0.499);
        const double above = slope(0.501);
        t.expect(below < 0.0 && above > 0.0, [&] {
          return describe(with_neutral(delta, alpha, beta, 0.5)) + " N slope " + num(below) + " / " + num(above);
        });
        const auto root = locate_sign_change(slope, 0.05, 0.95);
        t.expect(root && std::abs(*root - 0.5) <= 1e-3,
                 [&] { return "neutral flip at " + (root ? num(*root) : std::string("none")); });
      }
    }
  }

  SweepGrid grid;
  grid.x.steps = 100;
  grid.y.steps = 100;
  for (double lambda_n : {0.9, 0.5, 0.1}) {
    const auto map = region_map(grid, with_neutral(0.0, 0.0, 0.5, lambda_n));
    std::set<RegionLabel> seen;
    for (const auto& c : map.cells) {
      if (c.admissible && c.boundary_distance > kRegionBand) seen.insert(c.numeric);
    }
    t.expect(map.disagreements == 0 && map.compared > 0, [&] {
      return "lambda_n=" + num(lambda_n) + " " + std::to_string(map.disagreements) + " disagreements";
    });
    const bool supp = seen.count(RegionLabel::kUniversalSuppression) > 0;
    const bool polar = seen.count(RegionLabel::kPolarizedCreation) > 0;
    const bool emp = seen.count(RegionLabel::kUniversalEmpowerment) > 0;
    const bool shape = lambda_n == 0.9   ? emp && !polar && !supp
                       : lambda_n == 0.5 ? emp && polar && !supp
                                         : emp && polar && supp;
    t.expect(shape, [&] { return "lambda_n=" + num(lambda_n) + " wrong set of regions"; });
  }
  for (std::size_t d = 0; d < 50; ++d) {
    const double delta = 0.01 * d;
    const auto half = alpha_boundaries(with_neutral(delta, 0.5, 0.5, 0.5));
    const auto tenth = alpha_boundaries(with_neutral(delta, 0.5, 0.5, 0.1));
    const auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); };
    t.expect(near(half.group_b, 1.0 / (1.0 + 2.0 * delta)) && near(tenth.group_b, 5.0 / (9.0 * (1.0 + 2.0 * delta))) &&
                 near(tenth.group_a, 5.0 / (9.0 * (1.0 - 2.0 * delta))),
             [&] { return "boundary curves off at delta=" + num(delta); });
  }
  return t;
}

bool near_baseline_boundary(const ModelParams& p, double margin) {
  ModelParams base = p;
  base.variant = Baseline{};
  const auto flips = alpha_boundaries(base);
  return std::min(std::abs(p.alpha - flips.group_a), std::abs(p.alpha - flips.group_b)) <= margin;
}

Tally homophily_statics(std::uint64_t) {
  Tally t;
  for (std::size_t k = 1; k <= 9; ++k) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      for (double delta : {0.0, 0.1, 0.2}) {
        for (double beta : {0.0, 0.3, 0.6, 0.9}) {
          ModelParams p = figure_params(delta, alpha, beta);
          p.variant = ToxicityHomophily{0.1 * k};
          for (UserType toxic : {types::kAT, types::kBT}) {
            const double d = derivative(p, Parameter::kKappa, [toxic](const ModelParams& q) {
              return (1.0 - q.beta) * equilibrium(q)[toxic];
            });
            t.expect(d > 0.0, [&] { return describe(p) + " d surviving " + to_string(toxic) + "/dkappa = " + num(d); });
          }
          if (beta > 0.0 && !near_baseline_boundary(p, 0.01)) {
            const auto got = classify_region(p, ClassifyMode::kNumeric);
            const auto base = classify_region(figure_params(delta, alpha, beta), ClassifyMode::kAnalytic);
            t.expect(got == base, [&] {
              return describe(p) + " " + std::string(to_string(got)) + " vs baseline " + std::string(to_string(base));
            });
          }
        }
      }
    }
  }
  return t;
}

Tally negative_engagement_loving(std::uint64_t) {
  Tally t;
  double smallest = kInfinity;
  for (double omega : {-1.0, -0.5}) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      for (double delta : {0.0, 0.1, 0.2}) {
        for (double beta : {0.0, 0.3, 0.6, 0.9}) {
          ModelParams base = figure_params(delta, alpha, beta);
          base.omega = omega;
          ModelParams loving = base;
          loving.variant = NegativeEngagementLoving{};
          const auto eb = equilibrium(base);
          const auto el = equilibrium(loving);
          for (std::size_t g = 0; g < 2; ++g) {
            smallest = std::min(smallest, el.surviving_toxic[g] - eb.surviving_toxic[g]);
            t.expect(el.surviving_toxic[g] > eb.surviving_toxic[g], [&] {
              return describe(loving) + " surviving toxic " + num(el.surviving_toxic[g]) + " <= " + num(eb.surviving_toxic[g]);
            });
          }
          if (!near_baseline_boundary(loving, 0.01)) {
            const auto got = classify_region(loving, ClassifyMode::kNumeric);
            const auto want = classify_region(base, ClassifyMode::kNumeric);
            t.expect(got == want, [&] {
              return describe(loving) + " " + std::string(to_string(got)) + " vs " + std::string(to_string(want));
            });
          }
          if (delta > 0.0) {
            const double gb = welfare_gap(base);
            const double gl = welfare_gap(loving);
            const double db = welfare_gap_derivative(base, WelfareAxis::kBeta);
            const double dl = welfare_gap_derivative(loving, WelfareAxis::kBeta);
            t.expect(sign_of(gb, 0.0) == sign_of(gl, 0.0) && sign_of(db, 0.0) == sign_of(dl, 0.0), [&] {
              return describe(loving) + " gap " + num(gl) + " (baseline " + num(gb) + "), slope " + num(dl) +
                     " (baseline " + num(db) + ")";
            });
          }
        }
      }
    }
  }
  t.note("min toxic surplus " + num(smallest));
  return t;
}

Tally reach_robustness(std::uint64_t) {
  Tally t;
  struct Probe {
    double delta, alpha;
    RegionLabel label;
  };
  const Probe probes[] = {
      {0.1, 0.2, RegionLabel::kUniversalEmpowerment}, {0.2, 0.1, RegionLabel::kUniversalEmpowerment},
      {0.05, 0.3, RegionLabel::kUniversalEmpowerment}, {0.1, 0.5, RegionLabel::kPolarizedCreation},
      {0.05, 0.5, RegionLabel::kPolarizedCreation},   {0.2, 0.6, RegionLabel::kPolarizedCreation},
      {0.05, 0.8, RegionLabel::kUniversalSuppression}, {0.1, 0.9, RegionLabel::kUniversalSuppression},
      {0.02, 0.7, RegionLabel::kUniversalSuppression},
  };
  for (const auto& probe : probes) {
    for (ReachKind kind : {ReachKind::kLinear, ReachKind::kInverse, ReachKind::kExponential, ReachKind::kLogistic}) {
      ModelParams p = figure_params(probe.delta, probe.alpha, 0.5);
      p.reach.kind = kind;
      const auto got = classify_region(p, ClassifyMode::kNumeric);
      t.expect(got == probe.label, [&] {
        return describe(p) + " " + std::string(to_string(got)) + " expected " + std::string(to_string(probe.label));
      });
    }
  }
  return t;
}

Tally agent_oracle(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::size_t max_rounds = 0;
  for (const VariantSpec& v : all_variants()) {
    for (int k = 0; k < 20; ++k) {
      const ModelParams p = random_params(rng, v);
      const auto pool = sample_population(p, 100000, seed);
      const auto rep = simulate_equilibrium(pool, p);
      worst = std::max(worst, rep.max_deviation);
      max_rounds = std::max(max_rounds, rep.rounds);
      t.expect(rep.converged && rep.within_tolerance, [&] {
        return describe(p) + (rep.converged ? "" : " did not converge") + " max deviation " + num(rep.max_deviation);
      });
      t.expect(std::abs(rep.empirical_supply - rep.analytic_supply) <= 0.01,
               [&] { return describe(p) + " V " + num(rep.empirical_supply) + " vs " + num(rep.analytic_supply); });
    }
  }
  t.note("max deviation " + num(worst) + ", max rounds " + std::to_string(max_rounds));
  return t;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Tally(std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "engagement probabilities: exact cells and Monte Carlo frequencies", engagement_exactness},
      {2, "closed-form and iterative solvers agree; unique fixed point", solver_cross_validation},
      {3, "worked case V=3/7, pc(NT)=4/7, pc(T)=2/7", worked_case},
      {4, "symmetric population: moderation signs and flip at alpha=1/2", symmetric_lemma},
      {5, "moderation regions: numeric labels match thresholds on 200x200 grids", figure2_regions},
      {6, "surviving toxic content non-increasing in moderation", toxic_monotonicity},
      {7, "welfare gap rises with moderation; vanishes at balance", welfare_gap_moderation},
      {8, "personalization: region persistence, threshold and existence", personalization_statics},
      {9, "neutral users: flip at lambda_0 and region panels", neutral_users_statics},
      {10, "toxicity homophily raises surviving toxic content", homophily_statics},
      {11, "negative-engagement-loving toxic creators", negative_engagement_loving},
      {12, "region labels robust to the reach function", reach_robustness},
      {13, "agent-based oracle matches analytic creation", agent_oracle},
  };
  return all;
}

}  // namespace

std::vector<VariantSpec> all_variants() {
  return {Baseline{}, Personalization{0.3}, NeutralUsers{0.5}, ToxicityHomophily{0.5},
          NegativeEngagementLoving{}};
}

ModelParams random_params(std::mt19937_64& rng, const VariantSpec& variant) {
  const auto draw = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  ModelParams p;
  p.alpha = draw(0.0, 1.0);
  p.delta = draw(-0.45, 0.45);
  p.x = draw(0.05, 2.0 / 3.0);
  // tau_a must keep both groups' non-toxic masses non-negative.
  const double tau_lo = std::max(0.02, 1.0 - (0.5 - p.delta) / p.x);
  const double tau_hi = std::min(0.98, (0.5 + p.delta) / p.x);
  p.tau_a = draw(tau_lo, tau_hi);
  p.beta = draw(0.0, 1.0);
  p.omega = draw(-1.0, -0.02);
  p.gamma = draw(0.1, 0.9);
  p.variant = std::visit(
      [&](auto v) -> VariantSpec {
        using V = decltype(v);
        if constexpr (std::is_same_v<V, Personalization>) v.phi = draw(0.0, 1.0);
        if constexpr (std::is_same_v<V, NeutralUsers>) v.lambda_n = draw(0.05, 0.95);
        if constexpr (std::is_same_v<V, ToxicityHomophily>) v.kappa = draw(0.05, 0.95);
        return v;
      },
      variant);
  validate(p);
  return p;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream* progress) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Tally t = c.run(options.seed);
      r.passed = t.passed();
      r.detail = t.detail();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress) *progress << format_result(r) << std::endl;
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out.precision(2);
  out << (r.passed ? "PASS" : "FAIL") << " [" << (r.id < 10 ? " " : "") << r.id << "] " << r.title
      << ": " << r.detail << " (" << std::fixed << r.seconds << " s)";
  return out.str();
}

}  // namespace modgame
