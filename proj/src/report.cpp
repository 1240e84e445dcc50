#include "modgame/report.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace modgame {

using nlohmann::json;

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // drops the sign of -0
  std::array<char, 32> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
  std::string s(buf.data(), res.ptr);
  // to_chars keeps trailing zeros in the mantissa for precision-based output.
  const auto exp = s.find('e');
  std::string mantissa = s.substr(0, exp);
  const std::string tail = exp == std::string::npos ? "" : s.substr(exp);
  if (mantissa.find('.') != std::string::npos) {
    while (mantissa.back() == '0') mantissa.pop_back();
    if (mantissa.back() == '.') mantissa.pop_back();
  }
  return mantissa + tail;
}

namespace {

class Row {
 public:
  explicit Row(std::ostream& out) : out_(out) {}
  ~Row() { out_ << '\n'; }

  Row& operator<<(double v) { return field(format_number(v)); }
  Row& operator<<(std::size_t v) { return field(std::to_string(v)); }
  Row& operator<<(std::string_view v) { return field(v); }

 private:
  Row& field(std::string_view v) {
    if (!first_) out_ << ',';
    first_ = false;
    out_ << v;
    return *this;
  }

  std::ostream& out_;
  bool first_ = true;
};

json type_map(const TypeArray<double>& values, std::span<const UserType> active) {
  json out = json::object();
  for (UserType t : active) out[to_string(t)] = values[t.index()];
  return out;
}

}  // namespace

void write_sweep_csv(std::ostream& out, Parameter parameter, const std::vector<SweepRow>& rows) {
  out << csv::kSweepHeader << '\n';
  for (const auto& row : rows) {
    const auto& r = row.result;
    Row(out) << row.index << to_string(parameter) << row.value << r.supply << r.pc[0] << r.pc[1]
             << r.pc[2] << r.pc[3] << r.pc[4] << r.surviving_toxic[0] << r.surviving_toxic[1]
             << r.residual << to_string(r.solver);
  }
}

void write_regions_csv(std::ostream& out, const RegionMap& map) {
  out << csv::kRegionHeader << '\n';
  for (const auto& c : map.cells) {
    Row row(out);
    row << c.ix << c.iy << c.x << c.y << std::string_view(c.admissible ? "1" : "0");
    if (c.admissible) {
      row << to_string(c.analytic) << to_string(c.numeric) << c.slope_a << c.slope_b
          << c.boundary_distance;
    } else {
      row << "" << "" << "" << "" << "";
    }
  }
}

void write_welfare_csv(std::ostream& out, const std::vector<WelfareSurfaceRow>& rows) {
  out << csv::kWelfareHeader << '\n';
  for (const auto& r : rows) {
    Row(out) << r.beta << r.phi << r.report.eu[0] << r.report.eu[1] << r.report.gap
             << r.report.eu_total[0] << r.report.eu_total[1];
  }
}

json to_json(const EquilibriumResult& result) {
  json pc = json::object();
  for (std::size_t k = 0; k < kTypeCount; ++k) pc[to_string(UserType::from_index(k))] = result.pc[k];
  return {
      {"V", result.supply},
      {"pc", pc},
      {"surviving_toxic", {{"A", result.surviving_toxic[0]}, {"B", result.surviving_toxic[1]}}},
      {"residual", result.residual},
      {"solver", std::string(to_string(result.solver))},
      {"iterations", result.iterations},
      {"bisection", result.bisection},
  };
}

json to_json(const SimulationReport& report) {
  const std::span<const UserType> all(types::kAll);
  std::vector<UserType> present;
  for (UserType t : all) {
    if (report.counts[t.index()] > 0) present.push_back(t);
  }
  json counts = json::object();
  for (UserType t : present) counts[to_string(t)] = report.counts[t.index()];
  return {
      {"seed", report.seed},
      {"agents", report.agents},
      {"counts", counts},
      {"empirical_pc", type_map(report.empirical_pc, present)},
      {"analytic_pc", type_map(report.analytic_pc, present)},
      {"deviation", type_map(report.deviation, present)},
      {"max_deviation", report.max_deviation},
      {"empirical_V", report.empirical_supply},
      {"analytic_V", report.analytic_supply},
      {"iterations", report.rounds},
      {"converged", report.converged},
      {"cycle_detected", report.cycle_detected},
      {"inertial_rounds", report.inertial_rounds},
      {"within_tolerance", report.within_tolerance},
      {"trajectory", report.trajectory},
  };
}

json error_json(const Error& error) {
  return {{"error",
           {{"code", std::string(to_string(error.code()))},
            {"message", error.what()},
            {"details", error.details()}}}};
}

}  // namespace modgame
