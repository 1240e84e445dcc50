#include "modgame/types.hpp"

#include <cmath>
#include <sstream>

namespace modgame {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameters: return "invalid-parameters";
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kDomain: return "domain-error";
    case ErrorCode::kWrongVariant: return "wrong-variant";
    case ErrorCode::kNoConvergence: return "no-convergence";
    case ErrorCode::kDegenerateSupply: return "degenerate-supply";
  }
  return "unknown";
}

std::string_view to_string(Ideology ideology) {
  switch (ideology) {
    case Ideology::kA: return "A";
    case Ideology::kB: return "B";
    case Ideology::kN: return "N";
  }
  return "?";
}

std::string_view to_string(Toxicity toxicity) {
  return toxicity == Toxicity::kToxic ? "T" : "NT";
}

std::string to_string(UserType type) {
  std::string out(to_string(type.ideology()));
  out += '_';
  out += to_string(type.toxicity());
  return out;
}

UserType parse_user_type(std::string_view text) {
  for (UserType t : types::kAll) {
    if (to_string(t) == text) return t;
  }
  throw Error(ErrorCode::kDomain, "unknown user type '" + std::string(text) + "'");
}

std::string_view variant_name(const VariantSpec& variant) {
  struct Visitor {
    std::string_view operator()(const Baseline&) const { return "baseline"; }
    std::string_view operator()(const Personalization&) const { return "personalization"; }
    std::string_view operator()(const NeutralUsers&) const { return "neutral_users"; }
    std::string_view operator()(const ToxicityHomophily&) const { return "toxicity_homophily"; }
    std::string_view operator()(const NegativeEngagementLoving&) const {
      return "negative_engagement_loving";
    }
  };
  return std::visit(Visitor{}, variant);
}

std::string_view to_string(ReachKind kind) {
  switch (kind) {
    case ReachKind::kLinear: return "linear";
    case ReachKind::kInverse: return "inverse";
    case ReachKind::kExponential: return "exponential";
    case ReachKind::kLogistic: return "logistic";
  }
  return "?";
}

ReachKind parse_reach_kind(std::string_view text) {
  for (ReachKind k : {ReachKind::kLinear, ReachKind::kInverse, ReachKind::kExponential,
                      ReachKind::kLogistic}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::kDomain, "unknown reach kind '" + std::string(text) + "'");
}

namespace {

// Table 1 cells must be non-negative; a little slack absorbs the rounding in
// e.g. 0.5 - 0.25 - 0.25 at the admissibility edge.
constexpr double kMassSlack = 1e-15;

void check(std::vector<std::string>& errors, std::string_view prefix, bool ok,
           std::string_view field, std::string_view message) {
  if (ok) return;
  std::string line(prefix);
  line += field;
  line += ": ";
  line += message;
  errors.push_back(std::move(line));
}

bool finite_all(const ModelParams& p) {
  return std::isfinite(p.alpha) && std::isfinite(p.delta) && std::isfinite(p.x) &&
         std::isfinite(p.tau_a) && std::isfinite(p.beta) && std::isfinite(p.omega) &&
         std::isfinite(p.gamma);
}

}  // namespace

std::vector<std::string> validation_errors(const ModelParams& p, std::string_view prefix) {
  std::vector<std::string> errors;
  if (!finite_all(p)) {
    check(errors, prefix, false, "", "all parameters must be finite");
    return errors;
  }
  check(errors, prefix, p.alpha >= 0.0 && p.alpha <= 1.0, "alpha", "must lie in [0, 1]");
  check(errors, prefix, p.delta >= -0.5 && p.delta <= 0.5, "delta", "must lie in [-1/2, 1/2]");
  check(errors, prefix, p.x > 0.0 && p.x <= 2.0 / 3.0, "x", "must lie in (0, 2/3]");
  check(errors, prefix, p.tau_a > 0.0 && p.tau_a < 1.0, "tau_a", "must lie in (0, 1)");
  check(errors, prefix, p.beta >= 0.0 && p.beta <= 1.0, "beta", "must lie in [0, 1]");
  check(errors, prefix, p.omega >= -1.0 && p.omega < 0.0, "omega", "must lie in [-1, 0)");
  check(errors, prefix, p.gamma > 0.0 && p.gamma < 1.0, "gamma", "must lie in (0, 1)");

  if (const auto* v = std::get_if<Personalization>(&p.variant)) {
    check(errors, prefix, v->phi >= 0.0 && v->phi <= 1.0, "variant.phi", "must lie in [0, 1]");
  } else if (const auto* v = std::get_if<NeutralUsers>(&p.variant)) {
    check(errors, prefix, v->lambda_n > 0.0 && v->lambda_n < 1.0, "variant.lambda_n",
          "must lie in (0, 1)");
  } else if (const auto* v = std::get_if<ToxicityHomophily>(&p.variant)) {
    check(errors, prefix, v->kappa > 0.0 && v->kappa < 1.0, "variant.kappa",
          "must lie in (0, 1)");
  }

  if (p.reach.kind == ReachKind::kLogistic) {
    check(errors, prefix, std::isfinite(p.reach.steepness) && p.reach.steepness > 0.0,
          "reach.steepness", "must be positive");
    check(errors, prefix, std::isfinite(p.reach.midpoint), "reach.midpoint", "must be finite");
  }

  // Table 1 cells: toxic mass of each group cannot exceed the group's size.
  // Scaling by (1 - lambda_N) under the neutral variant does not change signs.
  if (p.x > 0.0 && p.tau_a > 0.0 && p.tau_a < 1.0 && std::abs(p.delta) <= 0.5) {
    check(errors, prefix, p.x * p.tau_a <= 0.5 + p.delta + kMassSlack, "x",
          "x * tau_a exceeds the size of group A (negative non-toxic mass)");
    check(errors, prefix, p.x * (1.0 - p.tau_a) <= 0.5 - p.delta + kMassSlack, "x",
          "x * (1 - tau_a) exceeds the size of group B (negative non-toxic mass)");
  }
  return errors;
}

void validate(const ModelParams& params) {
  auto errors = validation_errors(params);
  if (errors.empty()) return;
  std::ostringstream msg;
  msg << "invalid model parameters: " << errors.front();
  if (errors.size() > 1) msg << " (+" << errors.size() - 1 << " more)";
  throw Error(ErrorCode::kInvalidParameters, msg.str(), std::move(errors));
}

bool has_neutral_users(const ModelParams& params) {
  return std::holds_alternative<NeutralUsers>(params.variant);
}

double neutral_mass(const ModelParams& params) {
  const auto* v = std::get_if<NeutralUsers>(&params.variant);
  return v ? v->lambda_n : 0.0;
}

double out_group_weight(const ModelParams& params) {
  const auto* v = std::get_if<Personalization>(&params.variant);
  return v ? 1.0 - v->phi : 1.0;
}

double homophily_strength(const ModelParams& params) {
  const auto* v = std::get_if<ToxicityHomophily>(&params.variant);
  return v ? v->kappa : 0.0;
}

std::span<const UserType> active_types(const ModelParams& params) {
  if (has_neutral_users(params)) return types::kAll;
  return types::kPartisan;
}

std::string_view to_string(Parameter parameter) {
  switch (parameter) {
    case Parameter::kAlpha: return "alpha";
    case Parameter::kDelta: return "delta";
    case Parameter::kX: return "x";
    case Parameter::kTauA: return "tau_a";
    case Parameter::kBeta: return "beta";
    case Parameter::kOmega: return "omega";
    case Parameter::kGamma: return "gamma";
    case Parameter::kPhi: return "phi";
    case Parameter::kLambdaN: return "lambda_n";
    case Parameter::kKappa: return "kappa";
  }
  return "?";
}

Parameter parse_parameter(std::string_view name) {
  for (Parameter p : {Parameter::kAlpha, Parameter::kDelta, Parameter::kX, Parameter::kTauA,
                      Parameter::kBeta, Parameter::kOmega, Parameter::kGamma, Parameter::kPhi,
                      Parameter::kLambdaN, Parameter::kKappa}) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown parameter '" + std::string(name) + "'");
}

namespace {

template <class V, class Params>
auto& require_variant(Params& params, Parameter parameter) {
  auto* v = std::get_if<V>(&params.variant);
  if (!v) {
    throw Error(ErrorCode::kWrongVariant,
                "parameter '" + std::string(to_string(parameter)) + "' is not defined for the " +
                    std::string(variant_name(params.variant)) + " variant");
  }
  return *v;
}

}  // namespace

double get(const ModelParams& params, Parameter parameter) {
  switch (parameter) {
    case Parameter::kAlpha: return params.alpha;
    case Parameter::kDelta: return params.delta;
    case Parameter::kX: return params.x;
    case Parameter::kTauA: return params.tau_a;
    case Parameter::kBeta: return params.beta;
    case Parameter::kOmega: return params.omega;
    case Parameter::kGamma: return params.gamma;
    case Parameter::kPhi: return require_variant<Personalization>(params, parameter).phi;
    case Parameter::kLambdaN:
      return require_variant<NeutralUsers>(params, parameter).lambda_n;
    case Parameter::kKappa:
      return require_variant<ToxicityHomophily>(params, parameter).kappa;
  }
  return 0.0;
}

void set(ModelParams& params, Parameter parameter, double value) {
  switch (parameter) {
    case Parameter::kAlpha: params.alpha = value; return;
    case Parameter::kDelta: params.delta = value; return;
    case Parameter::kX: params.x = value; return;
    case Parameter::kTauA: params.tau_a = value; return;
    case Parameter::kBeta: params.beta = value; return;
    case Parameter::kOmega: params.omega = value; return;
    case Parameter::kGamma: params.gamma = value; return;
    case Parameter::kPhi: require_variant<Personalization>(params, parameter).phi = value; return;
    case Parameter::kLambdaN:
      require_variant<NeutralUsers>(params, parameter).lambda_n = value;
      return;
    case Parameter::kKappa:
      require_variant<ToxicityHomophily>(params, parameter).kappa = value;
      return;
  }
}

ModelParams with(const ModelParams& params, Parameter parameter, double value) {
  ModelParams out = params;
  set(out, parameter, value);
  return out;
}

Interval parameter_range(Parameter parameter) {
  switch (parameter) {
    case Parameter::kAlpha:
    case Parameter::kBeta:
    case Parameter::kPhi:
    case Parameter::kLambdaN:
    case Parameter::kKappa:
    case Parameter::kTauA:
    case Parameter::kGamma:
      return {0.0, 1.0};
    case Parameter::kDelta: return {-0.5, 0.5};
    case Parameter::kX: return {0.0, 2.0 / 3.0};
    case Parameter::kOmega: return {-1.0, 0.0};
  }
  return {0.0, 1.0};
}

}  // namespace modgame
