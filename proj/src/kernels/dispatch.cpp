#include <atomic>
#include <string>

#include "modgame/error.hpp"
#include "modgame/kernels.hpp"

namespace modgame::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::kScalar) return true;
#if defined(MODGAME_HAVE_AVX2)
  static const bool avx2 = __builtin_cpu_supports("avx2");
  return avx2;
#else
  return false;
#endif
}

Isa detected_isa() { return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar; }

namespace {

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw Error(ErrorCode::kDomain, "ISA " + std::string(to_string(isa)) + " is not available");
  }
  active().store(isa, std::memory_order_relaxed);
}

EngagementCounts tally_engagement(std::span<const double> shocks, double mu, double gamma) {
#if defined(MODGAME_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::tally_engagement(shocks, mu, gamma);
#endif
  return scalar::tally_engagement(shocks, mu, gamma);
}

DecisionCounts best_response(std::span<const double> shocks, double utility_on,
                             double utility_off, std::span<const std::uint8_t> created,
                             std::span<std::uint8_t> want) {
  if (shocks.size() != created.size() || shocks.size() != want.size()) {
    throw Error(ErrorCode::kDomain, "best_response: shock and flag spans differ in size");
  }
#if defined(MODGAME_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) {
    return avx2::best_response(shocks, utility_on, utility_off, created, want);
  }
#endif
  return scalar::best_response(shocks, utility_on, utility_off, created, want);
}

}  // namespace modgame::kernels
