#include "modgame/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace modgame {

using nlohmann::json;

namespace {

class Reader {
 public:
  std::vector<std::string> errors;

  bool object(const json& node, const std::string& path) {
    if (node.is_object()) return true;
    errors.push_back(path + ": expected an object");
    return false;
  }

  void known_keys(const json& node, const std::string& path, std::set<std::string> allowed) {
    for (const auto& [key, _] : node.items()) {
      if (!allowed.count(key)) errors.push_back(join(path, key) + ": unknown key");
    }
  }

  void number(const json& node, const std::string& path, const char* key, double& out) {
    if (!node.contains(key)) return;
    const json& v = node.at(key);
    if (!v.is_number()) {
      errors.push_back(join(path, key) + ": expected a number");
      return;
    }
    out = v.get<double>();
  }

  template <class T>
  void count(const json& node, const std::string& path, const char* key, T& out) {
    if (!node.contains(key)) return;
    const json& v = node.at(key);
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      out = static_cast<T>(v.get<std::uint64_t>());
      return;
    }
    errors.push_back(join(path, key) + ": expected a non-negative integer");
  }

  bool text(const json& node, const std::string& path, const char* key, std::string& out) {
    if (!node.contains(key)) return false;
    const json& v = node.at(key);
    if (!v.is_string()) {
      errors.push_back(join(path, key) + ": expected a string");
      return false;
    }
    out = v.get<std::string>();
    return true;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
};

VariantSpec read_variant(Reader& r, const json& node, const std::string& path) {
  if (!r.object(node, path)) return Baseline{};
  if (!node.contains("kind")) {
    r.errors.push_back(path + ".kind: required");
    return Baseline{};
  }
  std::string kind;
  if (!r.text(node, path, "kind", kind)) return Baseline{};
  if (kind == "baseline" || kind == "negative_engagement_loving") {
    r.known_keys(node, path, {"kind"});
    if (kind == "baseline") return Baseline{};
    return NegativeEngagementLoving{};
  }
  if (kind == "personalization") {
    r.known_keys(node, path, {"kind", "phi"});
    Personalization v;
    r.number(node, path, "phi", v.phi);
    return v;
  }
  if (kind == "neutral_users") {
    r.known_keys(node, path, {"kind", "lambda_n"});
    NeutralUsers v;
    r.number(node, path, "lambda_n", v.lambda_n);
    return v;
  }
  if (kind == "toxicity_homophily") {
    r.known_keys(node, path, {"kind", "kappa"});
    ToxicityHomophily v;
    r.number(node, path, "kappa", v.kappa);
    return v;
  }
  r.errors.push_back(path + ".kind: unknown variant '" + kind + "'");
  return Baseline{};
}

ReachFunction read_reach(Reader& r, const json& node, const std::string& path) {
  ReachFunction out;
  if (!r.object(node, path)) return out;
  r.known_keys(node, path, {"kind", "steepness", "midpoint"});
  std::string kind;
  if (r.text(node, path, "kind", kind)) {
    try {
      out.kind = parse_reach_kind(kind);
    } catch (const Error&) {
      r.errors.push_back(path + ".kind: unknown reach function '" + kind + "'");
    }
  }
  r.number(node, path, "steepness", out.steepness);
  r.number(node, path, "midpoint", out.midpoint);
  return out;
}

ModelParams read_params(Reader& r, const json& node, const std::string& path) {
  ModelParams p;
  if (!r.object(node, path)) return p;
  r.known_keys(node, path,
               {"alpha", "delta", "x", "tau_a", "beta", "omega", "gamma", "variant", "reach"});
  r.number(node, path, "alpha", p.alpha);
  r.number(node, path, "delta", p.delta);
  r.number(node, path, "x", p.x);
  r.number(node, path, "tau_a", p.tau_a);
  r.number(node, path, "beta", p.beta);
  r.number(node, path, "omega", p.omega);
  r.number(node, path, "gamma", p.gamma);
  if (node.contains("variant")) p.variant = read_variant(r, node.at("variant"), path + ".variant");
  if (node.contains("reach")) p.reach = read_reach(r, node.at("reach"), path + ".reach");
  return p;
}

}  // namespace

RunConfig parse_config(const json& doc) {
  Reader r;
  RunConfig cfg;
  if (!r.object(doc, "$")) {
    throw Error(ErrorCode::kInvalidConfig, "invalid configuration", r.errors);
  }
  r.known_keys(doc, "", {"schema_version", "params", "seed", "agents", "events", "grid_steps",
                         "surface_steps"});
  if (doc.contains("schema_version")) {
    const json& v = doc.at("schema_version");
    if (!v.is_number_integer() || v.get<std::int64_t>() != kSchemaVersion) {
      r.errors.push_back("schema_version: unsupported (expected " +
                         std::to_string(kSchemaVersion) + ")");
    }
  }
  if (doc.contains("params")) cfg.params = read_params(r, doc.at("params"), "params");
  r.count(doc, "", "seed", cfg.seed);
  r.count(doc, "", "agents", cfg.agents);
  r.count(doc, "", "events", cfg.events);
  r.count(doc, "", "grid_steps", cfg.grid_steps);
  r.count(doc, "", "surface_steps", cfg.surface_steps);
  if (cfg.grid_steps < 2) r.errors.push_back("grid_steps: must be at least 2");
  if (cfg.surface_steps < 2) r.errors.push_back("surface_steps: must be at least 2");

  // Parameter checks only make sense once the structure parsed.
  if (r.errors.empty()) {
    for (auto& e : validation_errors(cfg.params, "params.")) r.errors.push_back(std::move(e));
  }
  if (!r.errors.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "invalid configuration", r.errors);
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidConfig, "cannot open config file " + path.string());
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidConfig, "config is not valid JSON", {e.what()});
  }
  return parse_config(doc);
}

json to_json(const ModelParams& params) {
  json variant = {{"kind", std::string(variant_name(params.variant))}};
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Personalization>) variant["phi"] = v.phi;
        if constexpr (std::is_same_v<V, NeutralUsers>) variant["lambda_n"] = v.lambda_n;
        if constexpr (std::is_same_v<V, ToxicityHomophily>) variant["kappa"] = v.kappa;
      },
      params.variant);
  return {
      {"alpha", params.alpha},
      {"delta", params.delta},
      {"x", params.x},
      {"tau_a", params.tau_a},
      {"beta", params.beta},
      {"omega", params.omega},
      {"gamma", params.gamma},
      {"variant", variant},
      {"reach",
       {{"kind", std::string(to_string(params.reach.kind))},
        {"steepness", params.reach.steepness},
        {"midpoint", params.reach.midpoint}}},
  };
}

json to_json(const RunConfig& config) {
  return {
      {"schema_version", kSchemaVersion},
      {"params", to_json(config.params)},
      {"seed", config.seed},
      {"agents", config.agents},
      {"events", config.events},
      {"grid_steps", config.grid_steps},
      {"surface_steps", config.surface_steps},
  };
}

}  // namespace modgame
