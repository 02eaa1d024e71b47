#include <algorithm>
#include <cstdlib>
#include <cstring>

#include "mpg/kernels.hpp"

namespace mpg::kernels {

std::string_view isa_name(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept {
  if (isa == Isa::Scalar) return true;
#if defined(__x86_64__) || defined(__i386__)
  return avx2::compiled() && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Isa detect() noexcept {
  if (const char* forced = std::getenv("MPG_KERNEL"); forced && std::strcmp(forced, "scalar") == 0) {
    return Isa::Scalar;
  }
  return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

Isa active_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

void crossing_row(std::span<const std::int32_t> pos, std::span<const std::int32_t> fpos,
                  std::int32_t px, std::int32_t qx, std::span<std::uint8_t> out, Isa isa) {
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) {
    avx2::crossing_row(pos, fpos, px, qx, out);
  } else {
    scalar::crossing_row(pos, fpos, px, qx, out);
  }
}

bool girth_at_least_5(const Masks16& masks, Isa isa) {
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return avx2::girth_at_least_5(masks);
  return scalar::girth_at_least_5(masks);
}

Masks16 five_edge_masks(std::span<const int> sigma, const std::array<int, 5>& edges) {
  std::array<int, 5> targets{};
  for (std::size_t t = 0; t < 5; ++t) targets[t] = sigma[static_cast<std::size_t>(edges[t])];
  std::array<int, 5> sorted = targets;
  std::sort(sorted.begin(), sorted.end());

  Masks16 masks{};
  auto link = [&](int u, int v) {
    masks[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
    masks[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
  };
  for (int t = 0; t < 5; ++t) {
    link(t, (t + 1) % 5);
    link(5 + t, 5 + (t + 1) % 5);
    const auto rank = std::find(sorted.begin(), sorted.end(), targets[static_cast<std::size_t>(t)]) -
                      sorted.begin();
    link(t, 5 + static_cast<int>(rank));
  }
  return masks;
}

namespace scalar {

void crossing_row(std::span<const std::int32_t> pos, std::span<const std::int32_t> fpos,
                  std::int32_t px, std::int32_t qx, std::span<std::uint8_t> out) {
  const std::size_t n = pos.size();
  for (std::size_t y = 0; y < n; ++y) {
    const std::int32_t s = (pos[y] - px) ^ (fpos[y] - qx);
    out[y] = s < 0 ? 1 : 0;
  }
}

bool girth_at_least_5(const Masks16& masks) {
  for (unsigned u = 0; u < 16; ++u) {
    for (unsigned v = u + 1; v < 16; ++v) {
      const unsigned common = masks[u] & masks[v];
      if (common & (common - 1)) return false;              // 4-cycle
      if (((masks[u] >> v) & 1u) && common) return false;   // triangle
    }
  }
  return true;
}

}  // namespace scalar

}  // namespace mpg::kernels
