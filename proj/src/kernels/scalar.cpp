#include "modgame/kernels.hpp"

namespace modgame::kernels::scalar {

EngagementCounts tally_engagement(std::span<const double> shocks, double mu, double gamma) {
  const double dislike_at = -gamma;
  EngagementCounts out;
  for (double e : shocks) {
    const double u = mu + e;
    out.likes += u >= 0.0;
    out.dislikes += u <= dislike_at;
  }
  return out;
}

DecisionCounts best_response(std::span<const double> shocks, double utility_on,
                             double utility_off, std::span<const std::uint8_t> created,
                             std::span<std::uint8_t> want) {
  DecisionCounts out;
  for (std::size_t i = 0; i < shocks.size(); ++i) {
    const std::uint8_t before = created[i] & 1u;
    const double u = before ? utility_on : utility_off;
    const std::uint8_t c = (u + shocks[i]) > 0.0;
    out.changed += c != before;
    out.created += c;
    want[i] = c;
  }
  return out;
}

}  // namespace modgame::kernels::scalar
