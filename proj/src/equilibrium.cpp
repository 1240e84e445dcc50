#include "modgame/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace modgame {

std::string_view to_string(SolverKind kind) {
  return kind == SolverKind::kClosedForm ? "closed_form" : "iterative";
}

SupplyMap::SupplyMap(const ModelParams& params)
    : params_(params), incentives_(creator_incentives(params)) {}

double SupplyMap::creation(UserType type, double supply) const {
  const std::size_t k = type.index();
  return creation_from_utility(incentives_.survival[k], reach(supply, params_.reach),
                               incentives_.engagement[k]);
}

double SupplyMap::operator()(double supply) const {
  const double r = reach(supply, params_.reach);
  double total = 0.0;
  for (UserType t : active_types(params_)) {
    const std::size_t k = t.index();
    const double s = incentives_.survival[k];
    total += incentives_.population.mass[k] * s *
             creation_from_utility(s, r, incentives_.engagement[k]);
  }
  return total;
}

namespace {

EquilibriumResult finish(const SupplyMap& map, double supply, SolverKind solver,
                         std::size_t iterations) {
  EquilibriumResult out;
  out.supply = supply;
  out.solver = solver;
  out.iterations = iterations;
  for (UserType t : active_types(map.params())) out.pc[t.index()] = map.creation(t, supply);
  const double s_toxic = survival(Toxicity::kToxic, map.params().beta);
  out.surviving_toxic[0] = s_toxic * out.pc[types::kAT.index()];
  out.surviving_toxic[1] = s_toxic * out.pc[types::kBT.index()];
  out.residual = std::abs(supply - content_supply(out.pc, map.params()));
  return out;
}

// h(0) >= 0 and h(1) <= 0 always hold since g maps into [0, 1].
double bisect_root(const SupplyMap& map, double lo, double hi, std::size_t& evaluations) {
  double h_lo = map(lo) - lo;
  if (h_lo == 0.0) return lo;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double h_mid = map(mid) - mid;
    ++evaluations;
    if (h_mid == 0.0) return mid;
    if ((h_mid > 0.0) == (h_lo > 0.0)) {
      lo = mid;
      h_lo = h_mid;
    } else {
      hi = mid;
    }
  }
  // Return the endpoint with the smaller residual.
  const double r_lo = std::abs(map(lo) - lo);
  const double r_hi = std::abs(map(hi) - hi);
  return r_lo <= r_hi ? lo : hi;
}

}  // namespace

EquilibriumResult closed_form_equilibrium(const ModelParams& params) {
  if (params.reach.kind != ReachKind::kLinear) {
    throw Error(ErrorCode::kDomain, "closed-form equilibrium requires linear reach");
  }
  const SupplyMap map(params);
  const auto& inc = map.incentives();
  double m0 = 0.0;
  double m1 = 0.0;
  for (UserType t : active_types(params)) {
    const std::size_t k = t.index();
    const double ls = inc.population.mass[k] * inc.survival[k];
    m0 += ls;
    m1 += ls * inc.survival[k] * inc.engagement[k];
  }
  const double supply = (m0 + m1) / (2.0 + m1);

  // The affine form is only valid while no probability is clamped.
  bool interior = supply >= 0.0 && supply <= 1.0;
  for (UserType t : active_types(params)) {
    if (!interior) break;
    const std::size_t k = t.index();
    const double raw = (1.0 + inc.survival[k] * ((1.0 - supply) * inc.engagement[k])) * 0.5;
    interior = raw > 0.0 && raw < 1.0;
  }
  if (!interior) return solve_equilibrium(params);
  return finish(map, supply, SolverKind::kClosedForm, 0);
}

EquilibriumResult solve_equilibrium(const ModelParams& params, const SolverOptions& options) {
  const SupplyMap map(params);
  const double theta = options.damping;

  double v = options.initial_supply;
  double best_v = v;
  double best_residual = std::numeric_limits<double>::infinity();
  std::size_t since_improvement = 0;
  std::size_t iterations = 0;

  // Iterate well past the tolerance so the reported V is accurate to a few
  // ulps; stop once the residual stops improving.
  while (iterations < options.max_iterations) {
    const double g = map(v);
    const double residual = std::abs(g - v);
    if (residual < best_residual) {
      best_residual = residual;
      best_v = v;
      since_improvement = 0;
    } else if (++since_improvement >= 16) {
      break;
    }
    if (residual == 0.0) break;
    v = (1.0 - theta) * v + theta * g;
    ++iterations;
  }

  bool bisection = false;
  if (!(best_residual <= options.tolerance)) {
    bisection = true;
    best_v = bisect_root(map, 0.0, 1.0, iterations);
    best_residual = std::abs(map(best_v) - best_v);
  }
  if (!(best_residual <= options.tolerance)) {
    std::ostringstream msg;
    msg << "equilibrium solver did not converge: |g(V) - V| = " << best_residual
        << " at V = " << best_v << " after " << iterations << " evaluations";
    throw Error(ErrorCode::kNoConvergence, msg.str());
  }
  auto out = finish(map, best_v, SolverKind::kIterative, iterations);
  out.bisection = bisection;
  return out;
}

EquilibriumResult equilibrium(const ModelParams& params) {
  if (params.reach.kind == ReachKind::kLinear) return closed_form_equilibrium(params);
  return solve_equilibrium(params);
}

std::vector<double> find_all_fixed_points(const ModelParams& params, std::size_t grid_n) {
  if (grid_n < 1000) {
    throw Error(ErrorCode::kDomain, "find_all_fixed_points needs grid_n >= 1000");
  }
  const SupplyMap map(params);
  std::vector<double> roots;
  std::size_t evaluations = 0;

  const auto node = [&](std::size_t k) { return static_cast<double>(k) / grid_n; };
  double prev_v = node(0);
  double prev_h = map(prev_v) - prev_v;
  if (prev_h == 0.0) roots.push_back(prev_v);
  for (std::size_t k = 1; k <= grid_n; ++k) {
    const double v = node(k);
    const double h = map(v) - v;
    if (h == 0.0) {
      roots.push_back(v);
    } else if (prev_h != 0.0 && (h > 0.0) != (prev_h > 0.0)) {
      roots.push_back(bisect_root(map, prev_v, v, evaluations));
    }
    prev_v = v;
    prev_h = h;
  }
  return roots;
}

}  // namespace modgame
