#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "mpg/census.hpp"
#include "mpg/crossing.hpp"
#include "mpg/kernels.hpp"
#include "test_support.hpp"

using namespace mpg;
namespace k = mpg::kernels;

namespace {

std::vector<std::uint8_t> row_reference(const std::vector<std::int32_t>& pos,
                                        const std::vector<std::int32_t>& fpos, std::int32_t px,
                                        std::int32_t qx) {
  std::vector<std::uint8_t> out(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const bool a = pos[i] > px;
    const bool b = fpos[i] > qx;
    out[i] = (pos[i] != px && fpos[i] != qx && a != b) ? 1 : 0;
  }
  return out;
}

}  // namespace

TEST_CASE("isa names and availability") {
  CHECK(k::isa_name(k::Isa::Scalar) == "scalar");
  CHECK(k::isa_name(k::Isa::Avx2) == "avx2");
  CHECK(k::isa_available(k::Isa::Scalar));
  if (!k::avx2::compiled()) CHECK_FALSE(k::isa_available(k::Isa::Avx2));
}

TEST_CASE("crossing_row scalar matches the comparison reference") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(70));
    std::vector<std::int32_t> pos(static_cast<std::size_t>(m)), fpos(pos.size());
    std::iota(pos.begin(), pos.end(), 0);
    std::iota(fpos.begin(), fpos.end(), 0);
    for (int i = m - 1; i > 0; --i) {
      std::swap(fpos[static_cast<std::size_t>(i)],
                fpos[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    }
    const auto x = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)));
    std::vector<std::uint8_t> out(pos.size(), 7);
    k::scalar::crossing_row(pos, fpos, pos[x], fpos[x], out);
    CHECK(out == row_reference(pos, fpos, pos[x], fpos[x]));
  }
}

TEST_CASE("crossing_row avx2 equals scalar on every length and tail") {
  if (!k::isa_available(k::Isa::Avx2)) {
    MESSAGE("avx2 unavailable, equivalence skipped");
    return;
  }
  SplitMix64 rng(5);
  for (int m = 1; m <= 80; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int32_t> pos(static_cast<std::size_t>(m)), fpos(pos.size());
      for (auto& v : pos) v = static_cast<std::int32_t>(rng.below(200)) - 100;
      for (auto& v : fpos) v = static_cast<std::int32_t>(rng.below(200)) - 100;
      const auto px = static_cast<std::int32_t>(rng.below(200)) - 100;
      const auto qx = static_cast<std::int32_t>(rng.below(200)) - 100;
      std::vector<std::uint8_t> s(pos.size(), 9), v(pos.size(), 3);
      k::scalar::crossing_row(pos, fpos, px, qx, s);
      k::avx2::crossing_row(pos, fpos, px, qx, v);
      REQUIRE(s == v);
    }
  }
}

TEST_CASE("crossing graphs agree under both isas") {
  for (int m = 3; m <= 7; ++m) {
    for (const auto& g : testing_support::all_instances(m)) {
      const auto pos = rotated_positions(g, 0);
      const auto fpos = rotated_friend_positions(g, 0);
      for (int x = 0; x < m; ++x) {
        std::vector<std::uint8_t> s(pos.size()), v(pos.size());
        const auto ux = static_cast<std::size_t>(x);
        k::crossing_row(pos, fpos, pos[ux], fpos[ux], s, k::Isa::Scalar);
        k::crossing_row(pos, fpos, pos[ux], fpos[ux], v, k::active_isa());
        REQUIRE(s == v);
        for (int y = 1; y < m; ++y) {
          if (y == x || x == 0) continue;
          CHECK(static_cast<bool>(s[static_cast<std::size_t>(y)]) ==
                build_crossing_graph(g, 0).adjacent(x, y));
        }
      }
    }
  }
}

TEST_CASE("girth_at_least_5 kernels agree with the multigraph route on every 5-subset") {
  for (int m = 5; m <= 7; ++m) {
    for (const auto& g : testing_support::all_instances(m)) {
      std::array<int, 5> x{};
      std::vector<bool> pick(static_cast<std::size_t>(m), false);
      std::fill(pick.begin(), pick.begin() + 5, true);
      do {
        int c = 0;
        for (int i = 0; i < m; ++i) {
          if (pick[static_cast<std::size_t>(i)]) x[static_cast<std::size_t>(c++)] = i;
        }
        const auto masks = k::five_edge_masks(g.sigma(), x);
        const bool s = k::scalar::girth_at_least_5(masks);
        REQUIRE(s == is_m_p10(g, x));
        if (k::isa_available(k::Isa::Avx2)) REQUIRE(k::avx2::girth_at_least_5(masks) == s);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
}

TEST_CASE("girth_at_least_5 kernels agree on random masks") {
  if (!k::isa_available(k::Isa::Avx2)) return;
  SplitMix64 rng(99);
  int positives = 0;
  for (int trial = 0; trial < 200000; ++trial) {
    k::Masks16 masks{};
    const int n = 4 + static_cast<int>(rng.below(7));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.below(100) < 30) {
          masks[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
          masks[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
        }
      }
    }
    const bool s = k::scalar::girth_at_least_5(masks);
    positives += s ? 1 : 0;
    REQUIRE(k::avx2::girth_at_least_5(masks) == s);
  }
  CHECK(positives > 0);
}
