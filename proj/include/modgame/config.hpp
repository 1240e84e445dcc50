#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "modgame/types.hpp"

namespace modgame {

inline constexpr int kSchemaVersion = 1;

// Everything a command needs besides its own flags. Emitted results embed the
// resolved document so a run can be repeated from its own output.
struct RunConfig {
  ModelParams params;
  std::uint64_t seed = 42;
  std::size_t agents = 100000;
  std::size_t events = 1000000;
  std::size_t grid_steps = 200;
  std::size_t surface_steps = 21;
};

// Throws Error{kInvalidConfig} carrying one "path: message" entry per problem.
// Unknown keys are errors; missing keys take the defaults above.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const ModelParams& params);
nlohmann::json to_json(const RunConfig& config);

}  // namespace modgame
