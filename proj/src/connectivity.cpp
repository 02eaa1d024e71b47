#include <algorithm>
#include <numeric>

#include "mpg/graph.hpp"

namespace mpg {

namespace {

int vertex_id(const Mpg& g, VertexRef v) {
  return v.side == Side::A ? v.index : g.m() + v.index;
}

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

// True when removing `cut` (edge ids) leaves >= 2 components containing a cycle.
bool separates_cycles(const std::vector<std::pair<int, int>>& ends, int n,
                      std::span<const int> cut) {
  DisjointSets ds(n);
  for (std::size_t e = 0; e < ends.size(); ++e) {
    if (std::find(cut.begin(), cut.end(), static_cast<int>(e)) != cut.end()) continue;
    ds.unite(ends[e].first, ends[e].second);
  }
  std::vector<int> vertices(static_cast<std::size_t>(n), 0);
  std::vector<int> edges(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) ++vertices[static_cast<std::size_t>(ds.find(v))];
  for (std::size_t e = 0; e < ends.size(); ++e) {
    if (std::find(cut.begin(), cut.end(), static_cast<int>(e)) != cut.end()) continue;
    ++edges[static_cast<std::size_t>(ds.find(ends[e].first))];
  }
  int cyclic = 0;
  for (int r = 0; r < n; ++r) {
    const auto i = static_cast<std::size_t>(r);
    if (vertices[i] > 0 && edges[i] >= vertices[i]) ++cyclic;
  }
  return cyclic >= 2;
}

// Lexicographic walk over all k-subsets of {0..n-1}; stops when fn returns true.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(std::span<const int>(idx))) return true;
    int t = k - 1;
    while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - k + t) --t;
    if (t < 0) return false;
    ++idx[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) {
      idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
  }
}

}  // namespace

std::vector<GraphEdge> all_edges(const Mpg& g) {
  const int m = g.m();
  std::vector<GraphEdge> out;
  out.reserve(static_cast<std::size_t>(3 * m));
  for (int i = 0; i < m; ++i) out.push_back({{Side::A, i}, {Side::A, (i + 1) % m}});
  for (int j = 0; j < m; ++j) out.push_back({{Side::APrime, j}, {Side::APrime, (j + 1) % m}});
  for (int i = 0; i < m; ++i) out.push_back({{Side::A, i}, {Side::APrime, g.sigma(i)}});
  return out;
}

std::optional<std::vector<GraphEdge>> find_small_cyclic_cut(const Mpg& g) {
  const auto edges = all_edges(g);
  std::vector<std::pair<int, int>> ends;
  ends.reserve(edges.size());
  for (const auto& e : edges) ends.emplace_back(vertex_id(g, e.u), vertex_id(g, e.v));
  const int n = g.order();
  const int edge_count = static_cast<int>(edges.size());

  std::vector<int> found;
  for (int size = 1; size <= 4; ++size) {
    const bool hit = for_each_subset(edge_count, size, [&](std::span<const int> cut) {
      if (!separates_cycles(ends, n, cut)) return false;
      found.assign(cut.begin(), cut.end());
      return true;
    });
    if (hit) {
      std::vector<GraphEdge> out;
      for (int e : found) out.push_back(edges[static_cast<std::size_t>(e)]);
      return out;
    }
  }
  return std::nullopt;
}

bool is_cyclically_5_edge_connected(const Mpg& g) { return !find_small_cyclic_cut(g).has_value(); }

}  // namespace mpg
