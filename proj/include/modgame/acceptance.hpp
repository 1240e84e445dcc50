#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "modgame/types.hpp"

namespace modgame {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 42;
  std::vector<int> only;  // empty runs all criteria
};

// Runs the acceptance criteria in order. When `progress` is set, each result
// line is written as soon as the criterion finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            std::ostream* progress = nullptr);

// "PASS [ 3] title: detail (0.01 s)"
std::string format_result(const CriterionResult& result);

inline constexpr int kCriterionCount = 13;

// Admissible draw with the variant kind of `variant` and a fresh random value
// for its own parameter. Linear reach.
ModelParams random_params(std::mt19937_64& rng, const VariantSpec& variant);

// One representative of each variant with default extension parameters.
std::vector<VariantSpec> all_variants();

}  // namespace modgame
