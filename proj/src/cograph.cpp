#include "mpg/cograph.hpp"

#include <algorithm>

#include "mpg/error.hpp"

namespace mpg {

namespace {

// Orders a 4-set inducing P4 into a path starting from its smaller endpoint.
std::optional<InducedPath4> as_path(const CrossingGraph& h, const std::array<int, 4>& set) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (h.adjacent(set[i], set[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
    }
  }
  if (edges != 3) return std::nullopt;
  // 3 edges with degree multiset {1,1,2,2} on 4 vertices is exactly P4
  int ends = 0;
  int start = -1;
  for (std::size_t i = 0; i < 4; ++i) {
    if (deg[i] == 1) {
      ++ends;
      if (start < 0) start = static_cast<int>(i);
    } else if (deg[i] != 2) {
      return std::nullopt;
    }
  }
  if (ends != 2) return std::nullopt;

  InducedPath4 p;
  std::array<bool, 4> used{};
  int cur = start;
  for (std::size_t step = 0; step < 4; ++step) {
    p.vertices[step] = set[static_cast<std::size_t>(cur)];
    used[static_cast<std::size_t>(cur)] = true;
    for (int nxt = 0; nxt < 4; ++nxt) {
      if (!used[static_cast<std::size_t>(nxt)] &&
          h.adjacent(set[static_cast<std::size_t>(cur)], set[static_cast<std::size_t>(nxt)])) {
        cur = nxt;
        break;
      }
    }
  }
  return p;
}

}  // namespace

bool is_induced_p4(const CrossingGraph& h, const InducedPath4& p) {
  const auto& v = p.vertices;
  const int m = h.m();
  for (std::size_t i = 0; i < 4; ++i) {
    if (v[i] < 0 || v[i] >= m || v[i] == h.anchor()) return false;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return false;
      const bool want = (j == i + 1);
      if (h.adjacent(v[i], v[j]) != want) return false;
    }
  }
  return true;
}

std::optional<InducedPath4> find_induced_p4(const CrossingGraph& h) {
  const auto vs = h.vertices();
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          if (auto p = as_path(h, {vs[a], vs[b], vs[c], vs[d]})) return p;
        }
      }
    }
  }
  return std::nullopt;
}

bool are_twins(const CrossingGraph& h, std::span<const int> within, int x, int y) {
  if (x == y) return false;
  return std::all_of(within.begin(), within.end(), [&](int z) {
    return z == x || z == y || h.adjacent(z, x) == h.adjacent(z, y);
  });
}

bool are_twins(const CrossingGraph& h, int x, int y) {
  const auto vs = h.vertices();
  return are_twins(h, vs, x, y);
}

std::optional<TwinPair> find_twins(const CrossingGraph& h, std::span<const int> within) {
  if (within.size() < 2) {
    throw Error(ErrorCode::TooFewVertices, "twin search needs at least two vertices",
                {{"vertices", within.size()}});
  }
  for (std::size_t i = 0; i < within.size(); ++i) {
    for (std::size_t j = i + 1; j < within.size(); ++j) {
      const int x = within[i];
      const int y = within[j];
      if (are_twins(h, within, x, y)) {
        return TwinPair{x, y, h.adjacent(x, y) ? TwinKind::True : TwinKind::False};
      }
    }
  }
  return std::nullopt;
}

std::optional<TwinPair> find_twins(const CrossingGraph& h) {
  const auto vs = h.vertices();
  return find_twins(h, vs);
}

bool is_p4_free_by_twin_elimination(const CrossingGraph& h) {
  auto alive = h.vertices();
  while (alive.size() >= 2) {
    const auto t = find_twins(h, alive);
    if (!t) return false;
    alive.erase(std::find(alive.begin(), alive.end(), t->y));
  }
  return true;
}

bool is_p4_free(const CrossingGraph& h) {
  const bool brute = !find_induced_p4(h).has_value();
  const bool twins = is_p4_free_by_twin_elimination(h);
  if (brute != twins) {
    throw Error(ErrorCode::InternalInvariantViolated,
                "P4 search and twin elimination disagree",
                {{"brute_force", brute}, {"twin_elimination", twins}, {"edges", h.edges()}});
  }
  return brute;
}

}  // namespace mpg
