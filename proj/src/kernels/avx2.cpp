// Compiled with -mavx2 on x86; only reached after a runtime CPUID check.

#include <cstring>

#include "mpg/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace mpg::kernels::avx2 {

#if defined(__AVX2__)

bool compiled() noexcept { return true; }

void crossing_row(std::span<const std::int32_t> pos, std::span<const std::int32_t> fpos,
                  std::int32_t px, std::int32_t qx, std::span<std::uint8_t> out) {
  const std::size_t n = pos.size();
  const __m256i vpx = _mm256_set1_epi32(px);
  const __m256i vqx = _mm256_set1_epi32(qx);
  std::size_t y = 0;
  for (; y + 8 <= n; y += 8) {
    const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pos.data() + y));
    const __m256i q = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(fpos.data() + y));
    const __m256i s = _mm256_xor_si256(_mm256_sub_epi32(p, vpx), _mm256_sub_epi32(q, vqx));
    // sign bit -> 0/1 per lane, then narrow 32 -> 16 -> 8 bits
    const __m256i flag = _mm256_srli_epi32(s, 31);
    __m256i narrow = _mm256_packus_epi32(flag, flag);
    narrow = _mm256_packus_epi16(narrow, narrow);
    const auto lo = static_cast<std::uint32_t>(_mm_cvtsi128_si32(_mm256_castsi256_si128(narrow)));
    const auto hi =
        static_cast<std::uint32_t>(_mm_cvtsi128_si32(_mm256_extracti128_si256(narrow, 1)));
    std::memcpy(out.data() + y, &lo, 4);
    std::memcpy(out.data() + y + 4, &hi, 4);
  }
  for (; y < n; ++y) {
    const std::int32_t s = (pos[y] - px) ^ (fpos[y] - qx);
    out[y] = s < 0 ? 1 : 0;
  }
}

bool girth_at_least_5(const Masks16& masks) {
  const __m256i all = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data()));
  const __m256i ones = _mm256_set1_epi16(1);
  const __m256i lane_index =
      _mm256_setr_epi16(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  const __m256i lane_bit = _mm256_setr_epi16(
      1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384,
      static_cast<short>(0x8000));
  for (int u = 0; u < 16; ++u) {
    const auto mu = static_cast<short>(masks[static_cast<std::size_t>(u)]);
    if (mu == 0) continue;
    const __m256i bu = _mm256_set1_epi16(mu);
    const __m256i self = _mm256_cmpeq_epi16(lane_index, _mm256_set1_epi16(static_cast<short>(u)));
    const __m256i common = _mm256_andnot_si256(self, _mm256_and_si256(bu, all));
    // more than one common neighbour: c & (c - 1) != 0
    const __m256i multi = _mm256_and_si256(common, _mm256_sub_epi16(common, ones));
    // lanes adjacent to u that share a neighbour with u
    const __m256i adjacent = _mm256_cmpeq_epi16(_mm256_and_si256(bu, lane_bit), lane_bit);
    const __m256i tri = _mm256_and_si256(adjacent, common);
    const __m256i bad = _mm256_or_si256(multi, tri);
    if (!_mm256_testz_si256(bad, bad)) return false;
  }
  return true;
}

#else

bool compiled() noexcept { return false; }

void crossing_row(std::span<const std::int32_t> pos, std::span<const std::int32_t> fpos,
                  std::int32_t px, std::int32_t qx, std::span<std::uint8_t> out) {
  scalar::crossing_row(pos, fpos, px, qx, out);
}

bool girth_at_least_5(const Masks16& masks) { return scalar::girth_at_least_5(masks); }

#endif

}  // namespace mpg::kernels::avx2
