#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "modgame/model.hpp"
#include "modgame/reach.hpp"

namespace modgame {

enum class SolverKind { kClosedForm, kIterative };
std::string_view to_string(SolverKind kind);

struct EquilibriumResult {
  double supply = 0.0;        // V
  TypeArray<double> pc{};     // zero for inactive types
  std::array<double, 2> surviving_toxic{};  // S(T) * P_c(i, T) for A, B
  double residual = 0.0;      // |V - content_supply(pc)|
  SolverKind solver = SolverKind::kIterative;
  std::size_t iterations = 0;
  bool bisection = false;     // iterative solver fell back to bisection

  double operator[](UserType type) const { return pc[type.index()]; }
  double surviving(Ideology group) const {
    return surviving_toxic[group == Ideology::kA ? 0 : 1];
  }
};

// g(V): supply implied by all creators best-responding to belief V.
class SupplyMap {
 public:
  explicit SupplyMap(const ModelParams& params);

  double operator()(double supply) const;
  double creation(UserType type, double supply) const;
  const CreatorIncentives& incentives() const { return incentives_; }
  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
  CreatorIncentives incentives_;
};

struct SolverOptions {
  double damping = 0.5;
  double initial_supply = 0.5;
  double tolerance = 1e-12;
  std::size_t max_iterations = 100000;
};

inline constexpr double kResidualContract = 1e-10;

// Affine reduction under linear reach: V = (M0 + M1) / (2 + M1) with
// M0 = sum lambda S and M1 = sum lambda S^2 E. Falls over to the iterative
// solver when any P_c would leave (0, 1).
EquilibriumResult closed_form_equilibrium(const ModelParams& params);

// Damped iteration V <- (1 - theta) V + theta g(V), with bisection on
// h(V) = g(V) - V when the iteration stalls.
EquilibriumResult solve_equilibrium(const ModelParams& params, const SolverOptions& options = {});

// Closed form for linear reach, iterative otherwise.
EquilibriumResult equilibrium(const ModelParams& params);

// Uniqueness certificate: every sign change of h on a uniform grid, refined
// by bisection.
std::vector<double> find_all_fixed_points(const ModelParams& params, std::size_t grid_n);

}  // namespace modgame
