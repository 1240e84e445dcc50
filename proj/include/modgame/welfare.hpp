#pragma once

#include <array>
#include <vector>

#include "modgame/equilibrium.hpp"
#include "modgame/statics.hpp"

namespace modgame {

// What a reader of one group sees: surviving supply lambda * S * P_c per
// creator type, with out-group cells discounted by (1 - phi), normalized.
struct ExposureDistribution {
  Ideology reader_group = Ideology::kA;
  TypeArray<double> share{};

  double operator[](UserType type) const { return share[type.index()]; }
  double toxic_share() const;
};

ExposureDistribution exposure_shares(Ideology reader_group, const EquilibriumResult& eq,
                                     const ModelParams& params);

// Per-impression expected consumption utility of a reader group; the shock
// has mean zero and drops out. Within a group, reader toxicity subtypes are
// mass-weighted (they only differ under ToxicityHomophily).
double group_welfare(Ideology reader_group, const EquilibriumResult& eq,
                     const ModelParams& params);

struct WelfareReport {
  std::array<double, 3> eu{};              // per impression, indexed by Ideology
  std::array<double, 3> eu_total{};        // R(V) * unnormalized exposure, diagnostic
  std::array<double, 3> toxic_exposure{};  // toxic share of each group's feed
  double gap = 0.0;                        // eu(A) - eu(B); neutral readers excluded

  double welfare(Ideology group) const { return eu[static_cast<std::size_t>(group)]; }
};

WelfareReport welfare_report(const EquilibriumResult& eq, const ModelParams& params);
double welfare_gap(const ModelParams& params);

enum class WelfareAxis { kBeta, kPhi };

double welfare_gap_derivative(const ModelParams& params, WelfareAxis wrt);

struct WelfareSurfaceRow {
  double beta = 0.0;
  double phi = 0.0;
  WelfareReport report;
};

// (beta, phi) surface under Personalization, beta outer / phi inner.
std::vector<WelfareSurfaceRow> welfare_surface(const ModelParams& params, const Axis& beta_axis,
                                               const Axis& phi_axis);

}  // namespace modgame
