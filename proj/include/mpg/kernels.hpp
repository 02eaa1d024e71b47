#pragma once

// Inner-loop kernels. Each kernel has a scalar reference implementation and
// an AVX2 variant; the variant is picked at runtime from CPUID unless the
// MPG_KERNEL environment variable is set to "scalar". Both variants must
// produce identical results (see tests/test_kernels.cpp).

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace mpg::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;

/// Best ISA supported by this CPU and build, honoring MPG_KERNEL.
Isa active_isa() noexcept;

/// Crossing-row kernel. For every lane y:
///   out[y] = 1  iff  (pos[y] - px) and (fpos[y] - qx) have opposite signs.
/// pos and fpos are rotated positions along A and A'. Lanes with equal
/// positions (y == x) are 0.
void crossing_row(std::span<const std::int32_t> pos, std::span<const std::int32_t> fpos,
                  std::int32_t px, std::int32_t qx, std::span<std::uint8_t> out, Isa isa);

inline void crossing_row(std::span<const std::int32_t> pos, std::span<const std::int32_t> fpos,
                         std::int32_t px, std::int32_t qx, std::span<std::uint8_t> out) {
  crossing_row(pos, fpos, px, qx, out, active_isa());
}

/// Neighborhood bitmasks of a simple graph on <= 16 vertices; unused lanes 0.
using Masks16 = std::array<std::uint16_t, 16>;

/// Suppressed 5-edge match subgraph as bitmasks: vertices 0..4 are the kept A
/// vertices in cyclic order, 5..9 the kept A' vertices. `edges` must be
/// sorted, distinct A-indices.
Masks16 five_edge_masks(std::span<const int> sigma, const std::array<int, 5>& edges);

/// True iff no two distinct vertices share two neighbours and no edge lies in
/// a triangle, i.e. girth >= 5. On the cubic 10-vertex graphs produced by
/// five_edge_masks that is exactly "is the Petersen graph".
bool girth_at_least_5(const Masks16& masks, Isa isa);

inline bool girth_at_least_5(const Masks16& masks) {
  return girth_at_least_5(masks, active_isa());
}

namespace scalar {
void crossing_row(std::span<const std::int32_t> pos, std::span<const std::int32_t> fpos,
                  std::int32_t px, std::int32_t qx, std::span<std::uint8_t> out);
bool girth_at_least_5(const Masks16& masks);
}  // namespace scalar

namespace avx2 {
bool compiled() noexcept;
void crossing_row(std::span<const std::int32_t> pos, std::span<const std::int32_t> fpos,
                  std::int32_t px, std::int32_t qx, std::span<std::uint8_t> out);
bool girth_at_least_5(const Masks16& masks);
}  // namespace avx2

}  // namespace mpg::kernels
