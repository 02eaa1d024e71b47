#include "mpg/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "mpg/error.hpp"

namespace mpg {

namespace {

int mod(int v, int m) { return ((v % m) + m) % m; }

}  // namespace

std::vector<int> Arc::vertices(int m) const {
  std::vector<int> out;
  for (int v = from;; v = mod(v + 1, m)) {
    out.push_back(v);
    if (v == to) break;
  }
  return out;
}

MarkedPermutationGraph::MarkedPermutationGraph(std::vector<int> sigma)
    : sigma_(std::move(sigma)), inverse_(sigma_.size()) {
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    inverse_[static_cast<std::size_t>(sigma_[i])] = static_cast<int>(i);
  }
}

MarkedPermutationGraph MarkedPermutationGraph::validate(int m, std::span<const int> sigma) {
  if (m < 3) {
    throw Error(ErrorCode::TooSmall, "m must be at least 3", {{"m", m}});
  }
  if (static_cast<int>(sigma.size()) != m) {
    throw Error(ErrorCode::LengthMismatch, "sigma length differs from m",
                {{"m", m}, {"length", sigma.size()}});
  }
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const int v = sigma[i];
    if (v < 0 || v >= m) {
      throw Error(ErrorCode::NotAPermutation, "sigma entry out of range",
                  {{"position", i}, {"value", v}});
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::NotAPermutation, "duplicate sigma entry",
                  {{"position", i}, {"value", v}});
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return MarkedPermutationGraph(std::vector<int>(sigma.begin(), sigma.end()));
}

std::string MarkedPermutationGraph::id() const {
  std::ostringstream os;
  os << m() << ':';
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (i) os << ',';
    os << sigma_[i];
  }
  return os.str();
}

VertexRef friend_of(const Mpg& g, VertexRef v) {
  if (v.side == Side::A) return {Side::APrime, g.sigma(v.index)};
  return {Side::A, g.sigma_inv(v.index)};
}

std::vector<FourCycle> enumerate_m_c4(const Mpg& g) {
  const int m = g.m();
  std::vector<FourCycle> out;
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    const int d = mod(g.sigma(j) - g.sigma(i), m);
    if (d == 1 || d == m - 1) out.push_back({i, j});
  }
  return out;
}

std::vector<int> SuppressedGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
  for (auto [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

SuppressedGraph suppress_match(const Mpg& g, std::span<const int> edges) {
  const int m = g.m();
  std::vector<int> a_side(edges.begin(), edges.end());
  std::sort(a_side.begin(), a_side.end());
  a_side.erase(std::unique(a_side.begin(), a_side.end()), a_side.end());
  for (int i : a_side) {
    if (i < 0 || i >= m) {
      throw Error(ErrorCode::IndexOutOfRange, "matching edge index out of range", {{"index", i}});
    }
  }
  const int k = static_cast<int>(a_side.size());
  if (k < 2) {
    throw Error(ErrorCode::TooFewEdges, "need at least two matching edges", {{"count", k}});
  }

  std::vector<int> b_side(a_side.size());
  std::transform(a_side.begin(), a_side.end(), b_side.begin(), [&](int i) { return g.sigma(i); });
  std::sort(b_side.begin(), b_side.end());

  SuppressedGraph s;
  s.vertex_count = 2 * k;
  s.edges.reserve(static_cast<std::size_t>(3 * k));
  for (int t = 0; t < k; ++t) s.edges.emplace_back(t, (t + 1) % k);
  for (int t = 0; t < k; ++t) s.edges.emplace_back(k + t, k + (t + 1) % k);
  for (int t = 0; t < k; ++t) {
    const int target = g.sigma(a_side[static_cast<std::size_t>(t)]);
    const auto pos = std::lower_bound(b_side.begin(), b_side.end(), target) - b_side.begin();
    s.edges.emplace_back(t, k + static_cast<int>(pos));
  }
  return s;
}

int girth(const SuppressedGraph& s) {
  const int n = s.vertex_count;
  // adjacency with edge ids so parallel edges stay distinct
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  int best = std::numeric_limits<int>::max();
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    auto [u, v] = s.edges[e];
    if (u == v) {
      best = 1;
      continue;
    }
    adj[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(e));
    adj[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(e));
  }
  if (best == 1) return 1;

  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent_edge(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(root)] = 0;
    parent_edge[static_cast<std::size_t>(root)] = -1;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      const auto du = static_cast<std::size_t>(u);
      if (2 * dist[du] >= best) break;
      for (auto [v, e] : adj[du]) {
        const auto dv = static_cast<std::size_t>(v);
        if (e == parent_edge[du]) continue;
        if (dist[dv] < 0) {
          dist[dv] = dist[du] + 1;
          parent_edge[dv] = e;
          q.push(v);
        } else {
          best = std::min(best, dist[du] + dist[dv] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::NoCycle, "graph is acyclic");
  }
  return best;
}

bool is_petersen(const SuppressedGraph& s) {
  if (s.vertex_count != 10) return false;
  for (auto [u, v] : s.edges) {
    if (u == v) return false;
  }
  const auto deg = s.degrees();
  if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; })) return false;
  try {
    return girth(s) == 5;
  } catch (const Error&) {
    return false;
  }
}

bool PetersenWitness::contains(int e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

bool is_m_p10(const Mpg& g, std::span<const int> edges) {
  if (edges.size() != 5) return false;
  return is_petersen(suppress_match(g, edges));
}

// --- symmetry -------------------------------------------------------------

Mpg apply_symmetry(const Mpg& g, SymmetryOp op) {
  const int m = g.m();
  std::vector<int> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int v = 0;
    switch (op.kind) {
      case SymmetryKind::RotateA: v = g.sigma(mod(i + op.shift, m)); break;
      case SymmetryKind::RotateAPrime: v = mod(g.sigma(i) - op.shift, m); break;
      case SymmetryKind::Reflect: v = mod(-g.sigma(mod(-i, m)), m); break;
      case SymmetryKind::SwapSides: v = g.sigma_inv(i); break;
    }
    out[static_cast<std::size_t>(i)] = v;
  }
  return Mpg::validate(m, out);
}

int map_edge(const Mpg& g, SymmetryOp op, int i) {
  const int m = g.m();
  switch (op.kind) {
    case SymmetryKind::RotateA: return mod(i - op.shift, m);
    case SymmetryKind::RotateAPrime: return i;
    case SymmetryKind::Reflect: return mod(-i, m);
    case SymmetryKind::SwapSides: return g.sigma(i);
  }
  return i;
}

}  // namespace mpg
