#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "modgame/error.hpp"

namespace modgame {

enum class Ideology : std::uint8_t { kA, kB, kN };
enum class Toxicity : std::uint8_t { kToxic, kNonToxic };

std::string_view to_string(Ideology ideology);
std::string_view to_string(Toxicity toxicity);

inline constexpr Ideology opposite(Ideology i) {
  return i == Ideology::kA ? Ideology::kB : Ideology::kA;
}

inline constexpr std::size_t kTypeCount = 5;

// (ideology, toxicity) pair. Neutral users never post toxic content, so
// (N, T) cannot be constructed.
class UserType {
 public:
  constexpr UserType(Ideology ideology, Toxicity toxicity)
      : ideology_(ideology), toxicity_(toxicity) {
    if (ideology == Ideology::kN && toxicity == Toxicity::kToxic) {
      throw Error(ErrorCode::kDomain, "neutral users cannot be toxic");
    }
  }

  constexpr Ideology ideology() const { return ideology_; }
  constexpr Toxicity toxicity() const { return toxicity_; }
  constexpr bool toxic() const { return toxicity_ == Toxicity::kToxic; }
  constexpr bool neutral() const { return ideology_ == Ideology::kN; }

  // Dense index: A_T=0, A_NT=1, B_T=2, B_NT=3, N_NT=4.
  constexpr std::size_t index() const {
    if (ideology_ == Ideology::kN) return 4;
    return (ideology_ == Ideology::kA ? 0 : 2) + (toxic() ? 0 : 1);
  }

  static constexpr UserType from_index(std::size_t index) {
    switch (index) {
      case 0: return {Ideology::kA, Toxicity::kToxic};
      case 1: return {Ideology::kA, Toxicity::kNonToxic};
      case 2: return {Ideology::kB, Toxicity::kToxic};
      case 3: return {Ideology::kB, Toxicity::kNonToxic};
      case 4: return {Ideology::kN, Toxicity::kNonToxic};
      default: throw Error(ErrorCode::kDomain, "user type index out of range");
    }
  }

  friend constexpr bool operator==(UserType, UserType) = default;

 private:
  Ideology ideology_;
  Toxicity toxicity_;
};

std::string to_string(UserType type);
UserType parse_user_type(std::string_view text);

namespace types {
inline constexpr UserType kAT{Ideology::kA, Toxicity::kToxic};
inline constexpr UserType kANT{Ideology::kA, Toxicity::kNonToxic};
inline constexpr UserType kBT{Ideology::kB, Toxicity::kToxic};
inline constexpr UserType kBNT{Ideology::kB, Toxicity::kNonToxic};
inline constexpr UserType kNNT{Ideology::kN, Toxicity::kNonToxic};
inline constexpr std::array<UserType, 4> kPartisan{kAT, kANT, kBT, kBNT};
inline constexpr std::array<UserType, 5> kAll{kAT, kANT, kBT, kBNT, kNNT};
}  // namespace types

template <class T>
using TypeArray = std::array<T, kTypeCount>;

// --- Variants ---------------------------------------------------------------

struct Baseline {};
struct Personalization {
  double phi = 0.0;
};
struct NeutralUsers {
  double lambda_n = 0.5;
};
struct ToxicityHomophily {
  double kappa = 0.5;
};
// omega(NT) = omega, omega(T) = -omega.
struct NegativeEngagementLoving {};

using VariantSpec = std::variant<Baseline, Personalization, NeutralUsers,
                                 ToxicityHomophily, NegativeEngagementLoving>;

std::string_view variant_name(const VariantSpec& variant);

enum class ReachKind { kLinear, kInverse, kExponential, kLogistic };

std::string_view to_string(ReachKind kind);
ReachKind parse_reach_kind(std::string_view text);

struct ReachFunction {
  ReachKind kind = ReachKind::kLinear;
  // Logistic shape only.
  double steepness = 4.0;
  double midpoint = 0.5;
};

// Scalar primitives of the game. Defaults are the figure settings
// (omega = -1, gamma = 1/2, x = 1/2, tau_A = 1/2).
struct ModelParams {
  double alpha = 0.0;   // affective polarization weight
  double delta = 0.0;   // ideological imbalance; negative means B is majority
  double x = 0.5;       // total toxic mass
  double tau_a = 0.5;   // share of toxic users in group A
  double beta = 0.0;    // moderation intensity
  double omega = -1.0;  // weight on negative engagement (NT creators)
  double gamma = 0.5;   // dislike threshold
  VariantSpec variant = Baseline{};
  ReachFunction reach{};
};

// Returns one message per violated constraint, prefixed with `prefix`
// (e.g. "params."). Empty means admissible.
std::vector<std::string> validation_errors(const ModelParams& params,
                                           std::string_view prefix = "");
// Throws Error{kInvalidParameters} listing every violation.
void validate(const ModelParams& params);

bool has_neutral_users(const ModelParams& params);
double neutral_mass(const ModelParams& params);      // lambda_N or 0
double out_group_weight(const ModelParams& params);  // 1 - phi or 1
double homophily_strength(const ModelParams& params);  // kappa or 0

// Types that exist under the selected variant, in index order.
std::span<const UserType> active_types(const ModelParams& params);

// Scalar parameters addressable by name (sweeps, finite differences).
enum class Parameter {
  kAlpha, kDelta, kX, kTauA, kBeta, kOmega, kGamma, kPhi, kLambdaN, kKappa
};

std::string_view to_string(Parameter parameter);
Parameter parse_parameter(std::string_view name);
double get(const ModelParams& params, Parameter parameter);
// Variant-specific parameters require the matching variant.
void set(ModelParams& params, Parameter parameter, double value);
ModelParams with(const ModelParams& params, Parameter parameter, double value);

struct Interval {
  double lo;
  double hi;
};
// Closed hull of the admissible range, used to pick difference stencils.
Interval parameter_range(Parameter parameter);

}  // namespace modgame
