#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "modgame/report.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "modgame_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string(MODGAME_CLI) + " " + args + " 2>" + err.string();
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

fs::path write_config(const std::string& name, const json& doc) {
  const fs::path path = scratch() / name;
  std::ofstream(path) << doc.dump();
  return path;
}

}  // namespace

TEST_CASE("solve at the symmetric worked case") {
  const auto cfg = write_config("worked.json", {{"params", {{"alpha", 0.0}, {"delta", 0.0}, {"beta", 0.0}}}});
  const Run r = run("solve --config " + cfg.string());
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["result"]["V"].get<double>() - 3.0 / 7.0) < 1e-12);
  CHECK(std::abs(j["result"]["pc"]["A_NT"].get<double>() - 4.0 / 7.0) < 1e-12);
  CHECK(j["welfare"]["gap"].get<double>() == doctest::Approx(0.0));

  // The embedded config reproduces the run byte for byte.
  const auto again = write_config("echo.json", j["config"]);
  CHECK(run("solve --config " + again.string()).out == r.out);
}

TEST_CASE("regions traces the baseline boundaries") {
  const auto cfg = write_config("grid.json", {{"grid_steps", 11}});
  const fs::path out = scratch() / "regions.csv";
  const Run r = run("--config " + cfg.string() + " --out " + out.string() + " regions --figure fig2");
  REQUIRE(r.status == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind(std::string(modgame::csv::kRegionHeader), 0) == 0);
  CHECK(fs::exists(out.string() + ".config.json"));

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::size_t rows = 0;
  std::size_t checked = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() < 7 || f[4] != "1") continue;
    const double delta = std::stod(f[2]);
    const double alpha = std::stod(f[3]);
    const double lo = 1.0 / (2.0 * (1.0 + 2.0 * delta));
    const double hi = 1.0 / (2.0 * (1.0 - 2.0 * delta));
    if (std::abs(alpha - lo) < 0.02 || std::abs(alpha - hi) < 0.02) continue;
    // Between the thresholds the two groups' civil creators move apart.
    if (alpha > lo && alpha < hi) {
      CHECK(f[5] == "PolarizedCreation");
    } else {
      CHECK(f[5] != "PolarizedCreation");
    }
    ++checked;
  }
  CHECK(rows == 121);
  CHECK(checked > 50);
}

TEST_CASE("sweep, welfare and simulate outputs") {
  const auto cfg = write_config("small.json", {{"grid_steps", 5}, {"surface_steps", 3}});
  Run r = run("--config " + cfg.string() + " sweep --param beta --from 0 --to 1");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind(std::string(modgame::csv::kSweepHeader) + "\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);

  r = run("--config " + cfg.string() + " welfare --surface beta,phi");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind(std::string(modgame::csv::kWelfareHeader) + "\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);

  r = run("--seed 3 simulate --agents 5000");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["report"]["converged"] == true);
  CHECK(j["report"]["seed"] == 3);
  CHECK(run("--seed 3 simulate --agents 5000").out == r.out);
}

TEST_CASE("invalid input is reported as JSON") {
  const auto bad = write_config("bad.json", {{"params", {{"alpha", 3}}}});
  Run r = run("solve --config " + bad.string());
  CHECK(r.status != 0);
  CHECK(r.out.empty());
  json j = json::parse(r.err);
  CHECK(j["error"]["code"] == "invalid-config");
  CHECK(j["error"]["details"][0].get<std::string>().rfind("params.alpha", 0) == 0);

  r = run("sweep --param nope --from 0 --to 1");
  CHECK(r.status != 0);
  CHECK(json::parse(r.err).contains("error"));

  r = run("frobnicate");
  CHECK(r.status != 0);
  CHECK(json::parse(r.err)["error"]["code"] == "invalid-arguments");

  r = run("simulate --agents 10");
  CHECK(r.status != 0);
  CHECK(json::parse(r.err)["error"]["code"] == "domain-error");
}

TEST_CASE("verify runs selected criteria") {
  const Run r = run("verify --only 3");
  CHECK(r.status == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("1/1 criteria passed") != std::string::npos);
}
