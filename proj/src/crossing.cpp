#include "mpg/crossing.hpp"

#include "mpg/error.hpp"
#include "mpg/kernels.hpp"

namespace mpg {

namespace {

void check_anchor(int m, int anchor) {
  if (anchor < 0 || anchor >= m) {
    throw Error(ErrorCode::IndexOutOfRange, "anchor out of range", {{"anchor", anchor}, {"m", m}});
  }
}

}  // namespace

CrossingGraph CrossingGraph::from_edges(int m, int anchor,
                                        std::span<const std::pair<int, int>> edges) {
  check_anchor(m, anchor);
  CrossingGraph h(m, anchor);
  for (auto [x, y] : edges) {
    if (x < 0 || y < 0 || x >= m || y >= m || x == y || x == anchor || y == anchor) {
      throw Error(ErrorCode::IndexOutOfRange, "bad crossing-graph edge", {{"x", x}, {"y", y}});
    }
    const auto um = static_cast<std::size_t>(m);
    h.adj_[static_cast<std::size_t>(x) * um + static_cast<std::size_t>(y)] = 1;
    h.adj_[static_cast<std::size_t>(y) * um + static_cast<std::size_t>(x)] = 1;
  }
  return h;
}

std::vector<int> CrossingGraph::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m_ - 1));
  for (int v = 0; v < m_; ++v) {
    if (v != anchor_) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> CrossingGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < m_; ++x) {
    for (int y = x + 1; y < m_; ++y) {
      if (adjacent(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

int CrossingGraph::edge_count() const { return static_cast<int>(edges().size()); }

std::vector<std::int32_t> rotated_positions(const Mpg& g, int anchor) {
  const int m = g.m();
  std::vector<std::int32_t> pos(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) pos[static_cast<std::size_t>(v)] = ((v - anchor) % m + m) % m;
  return pos;
}

std::vector<std::int32_t> rotated_friend_positions(const Mpg& g, int anchor) {
  const int m = g.m();
  const int base = g.sigma(anchor);
  std::vector<std::int32_t> fpos(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) fpos[static_cast<std::size_t>(v)] = ((g.sigma(v) - base) % m + m) % m;
  return fpos;
}

CrossingGraph build_crossing_graph(const Mpg& g, int anchor) {
  const int m = g.m();
  check_anchor(m, anchor);
  const auto pos = rotated_positions(g, anchor);
  const auto fpos = rotated_friend_positions(g, anchor);

  CrossingGraph h(m, anchor);
  const auto um = static_cast<std::size_t>(m);
  for (int x = 0; x < m; ++x) {
    if (x == anchor) continue;
    const auto ux = static_cast<std::size_t>(x);
    std::span<std::uint8_t> row(h.adj_.data() + ux * um, um);
    kernels::crossing_row(pos, fpos, pos[ux], fpos[ux], row);
  }
  return h;
}

}  // namespace mpg
