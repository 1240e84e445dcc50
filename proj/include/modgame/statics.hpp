#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "modgame/equilibrium.hpp"

namespace modgame {

inline constexpr double kDerivativeStep = 1e-4;
// |dP_c/dbeta| below this is reported as Boundary.
inline constexpr double kDerivativeNoiseFloor = 1e-6;

enum class RegionLabel {
  kUniversalSuppression,
  kUniversalEmpowerment,
  kPolarizedCreation,
  kBoundary,
};

std::string_view to_string(RegionLabel label);

// Derivative of an equilibrium functional with respect to one parameter.
// Central difference with step h; second-order one-sided stencil when the
// central stencil would leave the parameter's range.
double derivative(const ModelParams& params, Parameter wrt,
                  const std::function<double(const ModelParams&)>& functional,
                  double step = kDerivativeStep);

double dpc_dbeta(const ModelParams& params, UserType creator);

// Both non-toxic partisan slopes from one pair of solves.
struct NonToxicSlopes {
  double a = 0.0;
  double b = 0.0;
};
NonToxicSlopes non_toxic_slopes(const ModelParams& params);

struct BaselineThresholds {
  double alpha_lo;  // minority flips: (w + 2) / ((1 + 2 delta)(1 - w))
  double alpha_hi;  // majority flips: (w + 2) / ((1 - 2 delta)(1 - w)); +inf at delta = 1/2
  double alpha_1;   // delta = 0 flip: (2 + w) / (1 - w)
};

BaselineThresholds thresholds_baseline(double omega, double delta);

struct PersonalizationThresholds {
  double phi_lo;  // (4 delta (1 - w) + 4 w + 2) / (3 w (1 - 2 delta))
};

struct NeutralThresholds {
  double lambda_0;   // 2 - 3 / (1 - w)
  double lambda_lo;  // 1 - (w + 2) / (alpha (1 - w)(1 - 2 delta))
  double lambda_hi;  // 1 - (w + 2) / (alpha (1 - w)(1 + 2 delta))
};

using ExtensionThresholds = std::variant<PersonalizationThresholds, NeutralThresholds>;

// Throws kWrongVariant unless the variant is Personalization or NeutralUsers.
ExtensionThresholds thresholds_extensions(const ModelParams& params);

enum class ClassifyMode { kAnalytic, kNumeric };

// Analytic mode compares alpha (baseline) or lambda_N (neutral users) with the
// closed-form thresholds; numeric mode reads the signs of the finite-difference
// slopes of P_c*(A,NT) and P_c*(B,NT) in beta.
RegionLabel classify_region(const ModelParams& params, ClassifyMode mode);

RegionLabel label_from_slopes(double slope_a, double slope_b,
                              double noise_floor = kDerivativeNoiseFloor);

// Values of alpha at which each group's non-toxic slope changes sign under the
// baseline or neutral-users variant (may exceed 1 or be infinite).
struct AlphaBoundaries {
  double group_a;
  double group_b;
};
AlphaBoundaries alpha_boundaries(const ModelParams& params);

struct Axis {
  Parameter parameter = Parameter::kAlpha;
  double from = 0.0;
  double to = 1.0;
  std::size_t steps = 2;

  double value(std::size_t i) const;
};

void validate(const Axis& axis);

struct SweepGrid {
  Axis x{Parameter::kDelta, 0.0, 0.497, 200};
  Axis y{Parameter::kAlpha, 0.0, 1.0, 200};
};

struct RegionCell {
  std::size_t ix = 0;
  std::size_t iy = 0;
  double x = 0.0;
  double y = 0.0;
  bool admissible = false;
  RegionLabel analytic = RegionLabel::kBoundary;
  RegionLabel numeric = RegionLabel::kBoundary;
  double slope_a = 0.0;
  double slope_b = 0.0;
  double boundary_distance = 0.0;  // |alpha - nearest flip point|
};

struct RegionMap {
  SweepGrid grid;
  std::vector<RegionCell> cells;  // row-major: ix outer, iy inner
  std::size_t compared = 0;       // admissible cells outside the band
  std::size_t disagreements = 0;  // of those, analytic != numeric
};

inline constexpr double kRegionBand = 1e-3;

// Fills every cell with analytic and numeric labels. The y axis must be alpha.
RegionMap region_map(const SweepGrid& grid, const ModelParams& params, double band = kRegionBand);

struct SweepRow {
  std::size_t index = 0;
  double value = 0.0;
  EquilibriumResult result;
};

std::vector<SweepRow> sweep(const Axis& axis, const ModelParams& params);

// First sign change of f on [lo, hi] found by scanning `samples` nodes and
// bisecting the bracket; nullopt if f keeps one sign.
std::optional<double> locate_sign_change(const std::function<double(double)>& f, double lo,
                                         double hi, std::size_t samples = 64,
                                         double tolerance = 1e-9);

// Personalization: alpha at which dP_c*(B,NT)/dphi changes sign.
std::optional<double> personalization_alpha_threshold(const ModelParams& params);
// Personalization: beta at which d[(1-beta) P_c*(B,T)]/dphi changes sign.
// Scans the sign of d[R(V) E(B,T)]/dphi, which matches it for beta < 1 and
// does not vanish trivially at beta = 1.
std::optional<double> personalization_beta_threshold(const ModelParams& params);

}  // namespace modgame
