#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "modgame/config.hpp"
#include "modgame/oracle.hpp"
#include "modgame/statics.hpp"
#include "modgame/welfare.hpp"

namespace modgame {

// Column layouts are part of the public interface; tests pin them.
namespace csv {
inline constexpr std::string_view kSweepHeader =
    "index,param,value,V,pc_A_T,pc_A_NT,pc_B_T,pc_B_NT,pc_N_NT,"
    "surviving_toxic_A,surviving_toxic_B,residual,solver";
inline constexpr std::string_view kRegionHeader =
    "i_delta,i_alpha,delta,alpha,admissible,analytic_label,numeric_label,"
    "dpc_A_NT,dpc_B_NT,boundary_distance";
inline constexpr std::string_view kWelfareHeader =
    "beta,phi,eu_A,eu_B,gap,eu_total_A,eu_total_B";
}  // namespace csv

// Shortest general-format rendering with 9 significant digits; independent
// of the C locale.
std::string format_number(double value);

void write_sweep_csv(std::ostream& out, Parameter parameter, const std::vector<SweepRow>& rows);
void write_regions_csv(std::ostream& out, const RegionMap& map);
void write_welfare_csv(std::ostream& out, const std::vector<WelfareSurfaceRow>& rows);

nlohmann::json to_json(const EquilibriumResult& result);
nlohmann::json to_json(const SimulationReport& report);
nlohmann::json error_json(const Error& error);

}  // namespace modgame
