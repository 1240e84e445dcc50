#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops of the Monte Carlo oracle. Each kernel has a
// scalar reference and an AVX2 variant; the dispatched entry points pick one
// at runtime. Variants are bit-identical: they evaluate the same IEEE
// additions and comparisons, only the counting differs.
namespace modgame::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);
bool isa_supported(Isa isa);
// Best ISA supported by this CPU and build.
Isa detected_isa();
Isa active_isa();
// Throws Error{kDomain} if the ISA is unavailable.
void set_active_isa(Isa isa);

struct EngagementCounts {
  std::uint64_t likes = 0;
  std::uint64_t dislikes = 0;
};

struct DecisionCounts {
  std::size_t created = 0;
  std::size_t changed = 0;
};

// Counts mu + eps >= 0 (like) and mu + eps <= -gamma (dislike).
EngagementCounts tally_engagement(std::span<const double> shocks, double mu, double gamma);

// want[i] = (u_i + shocks[i] > 0) where u_i is utility_on for agents with
// created[i] set and utility_off otherwise. Reports how many want to create
// and how many differ from `created`. `want` may alias `created`; sizes must
// match.
DecisionCounts best_response(std::span<const double> shocks, double utility_on,
                             double utility_off, std::span<const std::uint8_t> created,
                             std::span<std::uint8_t> want);

namespace scalar {
EngagementCounts tally_engagement(std::span<const double> shocks, double mu, double gamma);
DecisionCounts best_response(std::span<const double> shocks, double utility_on,
                             double utility_off, std::span<const std::uint8_t> created,
                             std::span<std::uint8_t> want);
}  // namespace scalar

#if defined(MODGAME_HAVE_AVX2)
namespace avx2 {
EngagementCounts tally_engagement(std::span<const double> shocks, double mu, double gamma);
DecisionCounts best_response(std::span<const double> shocks, double utility_on,
                             double utility_off, std::span<const std::uint8_t> created,
                             std::span<std::uint8_t> want);
}  // namespace avx2
#endif

}  // namespace modgame::kernels
