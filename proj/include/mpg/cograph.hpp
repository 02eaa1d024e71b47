#pragma once

// Induced-P4 search and twin detection on crossing graphs. A graph is P4-free
// iff every induced subgraph on >= 2 vertices has a pair of twins, which gives
// two independent recognisers that are cross-checked against each other.

#include <array>
#include <optional>
#include <span>

#include "mpg/crossing.hpp"

namespace mpg {

/// Induced path x-y-z-w: edges xy, yz, zw and no others among the four.
struct InducedPath4 {
  std::array<int, 4> vertices{};
  friend bool operator==(const InducedPath4&, const InducedPath4&) = default;
};

enum class TwinKind { False, True };  // non-adjacent / adjacent

/// N(x) \ {y} == N(y) \ {x}, x < y.
struct TwinPair {
  int x = 0;
  int y = 0;
  TwinKind kind = TwinKind::False;
  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

bool is_induced_p4(const CrossingGraph& h, const InducedPath4& p);

/// Smallest induced P4 by sorted vertex set; the path is oriented so that its
/// first endpoint is the smaller one.
std::optional<InducedPath4> find_induced_p4(const CrossingGraph& h);

bool are_twins(const CrossingGraph& h, int x, int y);
bool are_twins(const CrossingGraph& h, std::span<const int> within, int x, int y);

/// Lexicographically smallest twin pair. Throws Error{TooFewVertices} on < 2 vertices.
std::optional<TwinPair> find_twins(const CrossingGraph& h);

/// Same search restricted to the induced subgraph on `within` (sorted).
std::optional<TwinPair> find_twins(const CrossingGraph& h, std::span<const int> within);

/// Repeatedly delete one vertex of a twin pair; P4-free iff one vertex remains.
bool is_p4_free_by_twin_elimination(const CrossingGraph& h);

/// Brute-force verdict, cross-checked against twin elimination.
/// Throws Error{InternalInvariantViolated} if the two ever disagree.
bool is_p4_free(const CrossingGraph& h);

}  // namespace mpg
