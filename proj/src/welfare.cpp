#include "modgame/welfare.hpp"

#include <string>

namespace modgame {

namespace {

std::size_t slot(Ideology group) { return static_cast<std::size_t>(group); }

void require_reader_group(Ideology group, const ModelParams& params) {
  if (group == Ideology::kN && !has_neutral_users(params)) {
    throw Error(ErrorCode::kDomain, "neutral readers only exist under neutral_users");
  }
}

// Unnormalized exposure weights of one reader group.
TypeArray<double> exposure_weights(Ideology reader_group, const EquilibriumResult& eq,
                                   const ModelParams& params, const PopulationProfile& pop) {
  const double out_weight = out_group_weight(params);
  TypeArray<double> w{};
  for (UserType c : active_types(params)) {
    double v = pop[c] * survival(c.toxicity(), params.beta) * eq[c];
    if (reader_group != Ideology::kN && !c.neutral() && c.ideology() != reader_group) {
      v *= out_weight;
    }
    w[c.index()] = v;
  }
  return w;
}

// mu of a reader group against one creator, mass-weighted over the group's
// toxicity subtypes.
double group_utility(Ideology reader_group, UserType creator, const ModelParams& params,
                     const PopulationProfile& pop) {
  if (reader_group == Ideology::kN) {
    return deterministic_utility(types::kNNT, creator, params);
  }
  const UserType toxic{reader_group, Toxicity::kToxic};
  const UserType civil{reader_group, Toxicity::kNonToxic};
  const double m_toxic = pop[toxic];
  const double m_civil = pop[civil];
  if (m_toxic + m_civil == 0.0) return deterministic_utility(civil, creator, params);
  return (m_toxic * deterministic_utility(toxic, creator, params) +
          m_civil * deterministic_utility(civil, creator, params)) /
         (m_toxic + m_civil);
}

}  // namespace

double ExposureDistribution::toxic_share() const {
  return share[types::kAT.index()] + share[types::kBT.index()];
}

ExposureDistribution exposure_shares(Ideology reader_group, const EquilibriumResult& eq,
                                     const ModelParams& params) {
  require_reader_group(reader_group, params);
  const auto pop = population_masses(params);
  const auto w = exposure_weights(reader_group, eq, params, pop);
  double total = 0.0;
  for (double v : w) total += v;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kDegenerateSupply, "no surviving content reaches readers of group " +
                                                  std::string(to_string(reader_group)));
  }
  ExposureDistribution out;
  out.reader_group = reader_group;
  for (std::size_t k = 0; k < kTypeCount; ++k) out.share[k] = w[k] / total;
  return out;
}

double group_welfare(Ideology reader_group, const EquilibriumResult& eq,
                     const ModelParams& params) {
  const auto pop = population_masses(params);
  const auto exposure = exposure_shares(reader_group, eq, params);
  double eu = 0.0;
  for (UserType c : active_types(params)) {
    eu += exposure[c] * group_utility(reader_group, c, params, pop);
  }
  return eu;
}

WelfareReport welfare_report(const EquilibriumResult& eq, const ModelParams& params) {
  const auto pop = population_masses(params);
  const double r = reach(eq.supply, params.reach);
  WelfareReport out;
  std::vector<Ideology> groups{Ideology::kA, Ideology::kB};
  if (has_neutral_users(params)) groups.push_back(Ideology::kN);
  for (Ideology g : groups) {
    const auto exposure = exposure_shares(g, eq, params);
    const auto weights = exposure_weights(g, eq, params, pop);
    double eu = 0.0;
    double total = 0.0;
    for (UserType c : active_types(params)) {
      const double mu = group_utility(g, c, params, pop);
      eu += exposure[c] * mu;
      total += weights[c.index()] * mu;
    }
    out.eu[slot(g)] = eu;
    out.eu_total[slot(g)] = r * total;
    out.toxic_exposure[slot(g)] = exposure.toxic_share();
  }
  out.gap = out.eu[slot(Ideology::kA)] - out.eu[slot(Ideology::kB)];
  return out;
}

double welfare_gap(const ModelParams& params) {
  return welfare_report(equilibrium(params), params).gap;
}

double welfare_gap_derivative(const ModelParams& params, WelfareAxis wrt) {
  const Parameter p = wrt == WelfareAxis::kBeta ? Parameter::kBeta : Parameter::kPhi;
  return derivative(params, p, [](const ModelParams& q) { return welfare_gap(q); });
}

std::vector<WelfareSurfaceRow> welfare_surface(const ModelParams& params, const Axis& beta_axis,
                                               const Axis& phi_axis) {
  validate(beta_axis);
  validate(phi_axis);
  if (beta_axis.parameter != Parameter::kBeta || phi_axis.parameter != Parameter::kPhi) {
    throw Error(ErrorCode::kInvalidConfig, "welfare surface axes must be (beta, phi)");
  }
  std::vector<WelfareSurfaceRow> rows;
  rows.reserve(beta_axis.steps * phi_axis.steps);
  for (std::size_t i = 0; i < beta_axis.steps; ++i) {
    for (std::size_t j = 0; j < phi_axis.steps; ++j) {
      ModelParams p = with(params, Parameter::kBeta, beta_axis.value(i));
      set(p, Parameter::kPhi, phi_axis.value(j));
      rows.push_back({p.beta, phi_axis.value(j), welfare_report(equilibrium(p), p)});
    }
  }
  return rows;
}

}  // namespace modgame
