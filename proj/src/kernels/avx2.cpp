// Compiled with -mavx2 only; never called unless the CPU reports AVX2.
#include <immintrin.h>

#include <cstring>

#include "modgame/kernels.hpp"

namespace modgame::kernels::avx2 {

EngagementCounts tally_engagement(std::span<const double> shocks, double mu, double gamma) {
  const double* p = shocks.data();
  const std::size_t n = shocks.size();
  const __m256d vmu = _mm256_set1_pd(mu);
  const __m256d vzero = _mm256_setzero_pd();
  const __m256d vdislike = _mm256_set1_pd(-gamma);

  EngagementCounts out;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d u = _mm256_add_pd(vmu, _mm256_loadu_pd(p + i));
    const int like = _mm256_movemask_pd(_mm256_cmp_pd(u, vzero, _CMP_GE_OQ));
    const int dislike = _mm256_movemask_pd(_mm256_cmp_pd(u, vdislike, _CMP_LE_OQ));
    out.likes += static_cast<unsigned>(__builtin_popcount(like));
    out.dislikes += static_cast<unsigned>(__builtin_popcount(dislike));
  }
  const auto tail = scalar::tally_engagement(shocks.subspan(i), mu, gamma);
  out.likes += tail.likes;
  out.dislikes += tail.dislikes;
  return out;
}

DecisionCounts best_response(std::span<const double> shocks, double utility_on,
                             double utility_off, std::span<const std::uint8_t> created,
                             std::span<std::uint8_t> want) {
  const double* p = shocks.data();
  const std::uint8_t* flags = created.data();
  std::uint8_t* out_flags = want.data();
  const std::size_t n = shocks.size();
  const __m256d von = _mm256_set1_pd(utility_on);
  const __m256d voff = _mm256_set1_pd(utility_off);
  const __m256d vzero = _mm256_setzero_pd();
  const __m256i izero = _mm256_setzero_si256();
  const __m256i ione = _mm256_set1_epi64x(1);

  DecisionCounts out;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    std::int32_t packed;
    std::memcpy(&packed, flags + i, sizeof packed);
    const __m256i f = _mm256_and_si256(_mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed)), ione);
    const __m256d on_mask = _mm256_castsi256_pd(_mm256_cmpgt_epi64(f, izero));
    const __m256d u = _mm256_add_pd(_mm256_blendv_pd(voff, von, on_mask), _mm256_loadu_pd(p + i));
    const unsigned now =
        static_cast<unsigned>(_mm256_movemask_pd(_mm256_cmp_pd(u, vzero, _CMP_GT_OQ)));
    const unsigned before = static_cast<unsigned>(_mm256_movemask_pd(on_mask));
    out.changed += static_cast<unsigned>(__builtin_popcount(now ^ before));
    out.created += static_cast<unsigned>(__builtin_popcount(now));
    out_flags[i] = now & 1u;
    out_flags[i + 1] = (now >> 1) & 1u;
    out_flags[i + 2] = (now >> 2) & 1u;
    out_flags[i + 3] = (now >> 3) & 1u;
  }
  const auto tail = scalar::best_response(shocks.subspan(i), utility_on, utility_off,
                                          created.subspan(i), want.subspan(i));
  out.created += tail.created;
  out.changed += tail.changed;
  return out;
}

}  // namespace modgame::kernels::avx2
