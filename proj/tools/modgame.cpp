// modgame: command-line front end for the moderation game toolkit.
//
//   modgame solve      [--config c.json] [--out r.json]
//   modgame sweep      --param beta --from 0 --to 1 --steps 101
//   modgame regions    --figure fig2|fig4 [--lambda-n 0.5]
//   modgame welfare    --surface beta,phi
//   modgame simulate   [--agents 100000] [--seed 42]
//   modgame verify     [--only 1,5,13]
//
// JSON goes to --out (or stdout); CSV outputs written to a file get a
// sidecar <out>.config.json holding the resolved configuration.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "modgame/acceptance.hpp"
#include "modgame/config.hpp"
#include "modgame/report.hpp"

namespace {

using modgame::Error;
using modgame::ErrorCode;
using nlohmann::json;

struct Globals {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
};

modgame::RunConfig resolve(const Globals& g) {
  modgame::RunConfig cfg;
  if (!g.config_path.empty()) cfg = modgame::load_config(g.config_path);
  if (g.seed) cfg.seed = *g.seed;
  return cfg;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidConfig, "cannot write " + g.out_path);
  out << text;
}

void emit_csv(const Globals& g, const modgame::RunConfig& cfg, const std::string& csv) {
  emit(g, csv);
  if (!g.out_path.empty()) {
    std::ofstream side(g.out_path + ".config.json", std::ios::binary);
    side << modgame::to_json(cfg).dump(2) << '\n';
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int fail(const json& error) {
  std::cerr << error.dump() << std::endl;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium, comparative statics and simulation for the content moderation game"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--out", g.out_path, "Output file (default: stdout)");
  app.add_option("--seed", g.seed, "Random seed (default 42)");

  auto* solve = app.add_subcommand("solve", "Equilibrium at the configured parameters (JSON)");

  auto* sweep = app.add_subcommand("sweep", "Equilibria along one parameter axis (CSV)");
  std::string sweep_param;
  double sweep_from = 0.0;
  double sweep_to = 1.0;
  std::optional<std::size_t> sweep_steps;
  sweep->add_option("--param", sweep_param, "Parameter name (alpha, delta, beta, phi, ...)")->required();
  sweep->add_option("--from", sweep_from, "Axis start")->required();
  sweep->add_option("--to", sweep_to, "Axis end")->required();
  sweep->add_option("--steps", sweep_steps, "Number of points (default: grid_steps)");

  auto* regions = app.add_subcommand("regions", "Region map over (delta, alpha) (CSV)");
  std::string figure = "fig2";
  double lambda_n = 0.5;
  regions->add_option("--figure", figure, "fig2 (baseline) or fig4 (neutral users)")
      ->check(CLI::IsMember({"fig2", "fig4"}));
  regions->add_option("--lambda-n", lambda_n, "Neutral mass for fig4");

  auto* welfare = app.add_subcommand("welfare", "Welfare surface over (beta, phi) (CSV)");
  std::string surface = "beta,phi";
  welfare->add_option("--surface", surface, "Surface axes")->check(CLI::IsMember({"beta,phi"}));

  auto* simulate = app.add_subcommand("simulate", "Agent-based best-response oracle (JSON)");
  std::optional<std::size_t> agents;
  simulate->add_option("--agents", agents, "Number of agents (default: agents)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite; exit 0 iff all pass");
  std::vector<int> only;
  verify->add_option("--only", only, "Criterion ids to run")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail({{"error", {{"code", "invalid-arguments"}, {"message", e.what()}, {"details", json::array()}}}});
  }

  try {
    modgame::RunConfig cfg = resolve(g);

    if (*solve) {
      const auto eq = modgame::equilibrium(cfg.params);
      const auto report = modgame::welfare_report(eq, cfg.params);
      emit(g, dump({{"config", modgame::to_json(cfg)},
                    {"result", modgame::to_json(eq)},
                    {"welfare",
                     {{"eu_A", report.eu[0]}, {"eu_B", report.eu[1]}, {"gap", report.gap}}}}));
    } else if (*sweep) {
      const modgame::Axis axis{modgame::parse_parameter(sweep_param), sweep_from, sweep_to,
                               sweep_steps.value_or(cfg.grid_steps)};
      std::ostringstream csv;
      modgame::write_sweep_csv(csv, axis.parameter, modgame::sweep(axis, cfg.params));
      emit_csv(g, cfg, csv.str());
    } else if (*regions) {
      if (figure == "fig4") {
        cfg.params.variant = modgame::NeutralUsers{lambda_n};
      } else {
        cfg.params.variant = modgame::Baseline{};
      }
      modgame::validate(cfg.params);
      modgame::SweepGrid grid;
      grid.x.steps = cfg.grid_steps;
      grid.y.steps = cfg.grid_steps;
      std::ostringstream csv;
      modgame::write_regions_csv(csv, modgame::region_map(grid, cfg.params));
      emit_csv(g, cfg, csv.str());
    } else if (*welfare) {
      if (!std::holds_alternative<modgame::Personalization>(cfg.params.variant)) {
        cfg.params.variant = modgame::Personalization{0.0};
      }
      const modgame::Axis beta{modgame::Parameter::kBeta, 0.0, 1.0, cfg.surface_steps};
      const modgame::Axis phi{modgame::Parameter::kPhi, 0.0, 1.0, cfg.surface_steps};
      std::ostringstream csv;
      modgame::write_welfare_csv(csv, modgame::welfare_surface(cfg.params, beta, phi));
      emit_csv(g, cfg, csv.str());
    } else if (*simulate) {
      if (agents) cfg.agents = *agents;
      const auto pool = modgame::sample_population(cfg.params, cfg.agents, cfg.seed);
      const auto report = modgame::simulate_equilibrium(pool, cfg.params);
      emit(g, dump({{"config", modgame::to_json(cfg)}, {"report", modgame::to_json(report)}}));
      if (!report.converged) {
        return fail(modgame::error_json(
            Error(ErrorCode::kNoConvergence, "best-response dynamics did not settle")));
      }
    } else if (*verify) {
      modgame::AcceptanceOptions options;
      options.seed = cfg.seed;
      options.only = only;
      const auto results = modgame::run_acceptance(options, &std::cout);
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed;
      std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
      return passed == results.size() ? 0 : 1;
    }
  } catch (const Error& e) {
    return fail(modgame::error_json(e));
  } catch (const std::exception& e) {
    return fail({{"error", {{"code", "internal"}, {"message", e.what()}, {"details", json::array()}}}});
  }
  return 0;
}
