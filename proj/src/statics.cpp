#include "modgame/statics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace modgame {

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::kUniversalSuppression: return "UniversalSuppression";
    case RegionLabel::kUniversalEmpowerment: return "UniversalEmpowerment";
    case RegionLabel::kPolarizedCreation: return "PolarizedCreation";
    case RegionLabel::kBoundary: return "Boundary";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Analytic labels collapse to Boundary only when alpha (or lambda_N) sits on a
// threshold up to rounding.
constexpr double kAnalyticBand = 1e-12;

// Applies the difference stencil to a vector-valued functional so several
// outputs share the same equilibrium solves.
template <std::size_t N, class F>
std::array<double, N> stencil(const ModelParams& params, Parameter wrt, double step, F&& f) {
  const double x = get(params, wrt);
  const Interval range = parameter_range(wrt);
  std::array<double, N> out{};
  if (x - step < range.lo) {
    const auto f0 = f(params);
    const auto f1 = f(with(params, wrt, x + step));
    const auto f2 = f(with(params, wrt, x + 2.0 * step));
    for (std::size_t k = 0; k < N; ++k) out[k] = (-3.0 * f0[k] + 4.0 * f1[k] - f2[k]) / (2.0 * step);
  } else if (x + step > range.hi) {
    const auto f0 = f(params);
    const auto f1 = f(with(params, wrt, x - step));
    const auto f2 = f(with(params, wrt, x - 2.0 * step));
    for (std::size_t k = 0; k < N; ++k) out[k] = (3.0 * f0[k] - 4.0 * f1[k] + f2[k]) / (2.0 * step);
  } else {
    const auto up = f(with(params, wrt, x + step));
    const auto down = f(with(params, wrt, x - step));
    for (std::size_t k = 0; k < N; ++k) out[k] = (up[k] - down[k]) / (2.0 * step);
  }
  return out;
}

int sign_with_band(double value, double band) {
  if (std::abs(value) <= band) return 0;
  return value > 0.0 ? 1 : -1;
}

RegionLabel label_from_signs(int a, int b) {
  if (a == 0 || b == 0) return RegionLabel::kBoundary;
  if (a > 0 && b > 0) return RegionLabel::kUniversalEmpowerment;
  if (a < 0 && b < 0) return RegionLabel::kUniversalSuppression;
  return RegionLabel::kPolarizedCreation;
}

void require_omega_delta(double omega, double delta) {
  if (!(omega >= -1.0 && omega < 0.0)) {
    throw Error(ErrorCode::kDomain, "thresholds need omega in [-1, 0)");
  }
  if (!(delta >= 0.0 && delta <= 0.5)) {
    throw Error(ErrorCode::kDomain, "thresholds need delta in [0, 1/2]");
  }
}

}  // namespace

double derivative(const ModelParams& params, Parameter wrt,
                  const std::function<double(const ModelParams&)>& functional, double step) {
  return stencil<1>(params, wrt, step, [&](const ModelParams& p) {
    return std::array<double, 1>{functional(p)};
  })[0];
}

double dpc_dbeta(const ModelParams& params, UserType creator) {
  return derivative(params, Parameter::kBeta,
                    [creator](const ModelParams& p) { return equilibrium(p)[creator]; });
}

NonToxicSlopes non_toxic_slopes(const ModelParams& params) {
  const auto d = stencil<2>(params, Parameter::kBeta, kDerivativeStep, [](const ModelParams& p) {
    const auto eq = equilibrium(p);
    return std::array<double, 2>{eq[types::kANT], eq[types::kBNT]};
  });
  return {d[0], d[1]};
}

BaselineThresholds thresholds_baseline(double omega, double delta) {
  require_omega_delta(omega, delta);
  const double num = omega + 2.0;
  const double den = 1.0 - omega;
  BaselineThresholds t;
  t.alpha_lo = num / ((1.0 + 2.0 * delta) * den);
  t.alpha_hi = delta == 0.5 ? kInf : num / ((1.0 - 2.0 * delta) * den);
  t.alpha_1 = num / den;
  return t;
}

ExtensionThresholds thresholds_extensions(const ModelParams& params) {
  const double w = params.omega;
  const double d = params.delta;
  if (std::holds_alternative<Personalization>(params.variant)) {
    require_omega_delta(w, d);
    return PersonalizationThresholds{(4.0 * d * (1.0 - w) + 4.0 * w + 2.0) /
                                     (3.0 * w * (1.0 - 2.0 * d))};
  }
  if (std::holds_alternative<NeutralUsers>(params.variant)) {
    require_omega_delta(w, std::abs(d));
    const double ad = std::abs(d);
    NeutralThresholds t;
    t.lambda_0 = 2.0 - 3.0 / (1.0 - w);
    // alpha = 0 sends both partisan thresholds to -inf (always empowerment).
    const double base = (w + 2.0) / (params.alpha * (1.0 - w));
    t.lambda_lo = ad == 0.5 ? -kInf : 1.0 - base / (1.0 - 2.0 * ad);
    t.lambda_hi = 1.0 - base / (1.0 + 2.0 * ad);
    return t;
  }
  throw Error(ErrorCode::kWrongVariant,
              "no extension thresholds for the " + std::string(variant_name(params.variant)) +
                  " variant");
}

RegionLabel label_from_slopes(double slope_a, double slope_b, double noise_floor) {
  return label_from_signs(sign_with_band(slope_a, noise_floor),
                          sign_with_band(slope_b, noise_floor));
}

RegionLabel classify_region(const ModelParams& params, ClassifyMode mode) {
  if (mode == ClassifyMode::kNumeric) {
    const auto s = non_toxic_slopes(params);
    return label_from_slopes(s.a, s.b);
  }
  validate(params);
  const bool a_majority = params.delta >= 0.0;
  int majority = 0;
  int minority = 0;
  if (std::holds_alternative<Baseline>(params.variant)) {
    const auto t = thresholds_baseline(params.omega, std::abs(params.delta));
    majority = sign_with_band(t.alpha_hi - params.alpha, kAnalyticBand);
    minority = sign_with_band(t.alpha_lo - params.alpha, kAnalyticBand);
  } else if (std::holds_alternative<NeutralUsers>(params.variant)) {
    const auto t = std::get<NeutralThresholds>(thresholds_extensions(params));
    const double lambda_n = neutral_mass(params);
    majority = sign_with_band(lambda_n - t.lambda_lo, kAnalyticBand);
    minority = sign_with_band(lambda_n - t.lambda_hi, kAnalyticBand);
  } else {
    throw Error(ErrorCode::kWrongVariant,
                "analytic classification is defined for baseline and neutral_users only");
  }
  return a_majority ? label_from_signs(majority, minority) : label_from_signs(minority, majority);
}

AlphaBoundaries alpha_boundaries(const ModelParams& params) {
  if (!std::holds_alternative<Baseline>(params.variant) && !has_neutral_users(params)) {
    throw Error(ErrorCode::kWrongVariant,
                "alpha boundaries are defined for baseline and neutral_users only");
  }
  // Group i's non-toxic slope has the sign of
  // (2 + w)/4 - partisan_share * m_{-i} * alpha (1 - w)/2.
  const double partisan_share = 1.0 - neutral_mass(params);
  const double num = params.omega + 2.0;
  const double den = 1.0 - params.omega;
  const auto flip = [&](double other_size) {
    const double d = 2.0 * partisan_share * other_size * den;
    return d == 0.0 ? kInf : num / d;
  };
  return {flip(0.5 - params.delta), flip(0.5 + params.delta)};
}

double Axis::value(std::size_t i) const {
  if (i + 1 == steps) return to;
  return from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void validate(const Axis& axis) {
  if (axis.steps < 2) throw Error(ErrorCode::kInvalidConfig, "axis needs at least 2 steps");
  if (!(axis.from < axis.to)) {
    throw Error(ErrorCode::kInvalidConfig, "axis must be strictly increasing (from < to)");
  }
}

RegionMap region_map(const SweepGrid& grid, const ModelParams& params, double band) {
  validate(grid.x);
  validate(grid.y);
  if (grid.y.parameter != Parameter::kAlpha) {
    throw Error(ErrorCode::kInvalidConfig, "region maps need alpha on the y axis");
  }
  RegionMap out;
  out.grid = grid;
  out.cells.reserve(grid.x.steps * grid.y.steps);
  for (std::size_t ix = 0; ix < grid.x.steps; ++ix) {
    for (std::size_t iy = 0; iy < grid.y.steps; ++iy) {
      RegionCell cell;
      cell.ix = ix;
      cell.iy = iy;
      cell.x = grid.x.value(ix);
      cell.y = grid.y.value(iy);
      ModelParams p = with(with(params, grid.x.parameter, cell.x), Parameter::kAlpha, cell.y);
      cell.admissible = validation_errors(p).empty();
      if (cell.admissible) {
        cell.analytic = classify_region(p, ClassifyMode::kAnalytic);
        const auto s = non_toxic_slopes(p);
        cell.slope_a = s.a;
        cell.slope_b = s.b;
        cell.numeric = label_from_slopes(s.a, s.b);
        const auto flips = alpha_boundaries(p);
        cell.boundary_distance =
            std::min(std::abs(cell.y - flips.group_a), std::abs(cell.y - flips.group_b));
        if (cell.boundary_distance > band) {
          ++out.compared;
          if (cell.analytic != cell.numeric) ++out.disagreements;
        }
      }
      out.cells.push_back(cell);
    }
  }
  return out;
}

std::vector<SweepRow> sweep(const Axis& axis, const ModelParams& params) {
  validate(axis);
  std::vector<SweepRow> rows;
  rows.reserve(axis.steps);
  for (std::size_t i = 0; i < axis.steps; ++i) {
    const double v = axis.value(i);
    rows.push_back({i, v, equilibrium(with(params, axis.parameter, v))});
  }
  return rows;
}

std::optional<double> locate_sign_change(const std::function<double(double)>& f, double lo,
                                         double hi, std::size_t samples, double tolerance) {
  samples = std::max<std::size_t>(samples, 1);
  double prev_x = lo;
  double prev_f = f(lo);
  if (prev_f == 0.0) return lo;
  for (std::size_t k = 1; k <= samples; ++k) {
    const double x = k == samples ? hi : lo + (hi - lo) * static_cast<double>(k) / samples;
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) != (prev_f > 0.0)) {
      double a = prev_x;
      double b = x;
      double fa = prev_f;
      while (b - a > tolerance) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      return 0.5 * (a + b);
    }
    prev_x = x;
    prev_f = fx;
  }
  return std::nullopt;
}

namespace {

void require_personalization(const ModelParams& params) {
  if (!std::holds_alternative<Personalization>(params.variant)) {
    throw Error(ErrorCode::kWrongVariant, "personalization thresholds need that variant");
  }
}

}  // namespace

std::optional<double> personalization_alpha_threshold(const ModelParams& params) {
  require_personalization(params);
  return locate_sign_change(
      [&](double alpha) {
        return derivative(with(params, Parameter::kAlpha, alpha), Parameter::kPhi,
                          [](const ModelParams& p) { return equilibrium(p)[types::kBNT]; });
      },
      0.0, 1.0);
}

std::optional<double> personalization_beta_threshold(const ModelParams& params) {
  require_personalization(params);
  return locate_sign_change(
      [&](double beta) {
        return derivative(with(params, Parameter::kBeta, beta), Parameter::kPhi,
                          [](const ModelParams& p) {
                            return reach(equilibrium(p).supply, p.reach) *
                                   creator_incentives(p).engagement[types::kBT.index()];
                          });
      },
      0.0, 1.0);
}

}  // namespace modgame
