#pragma once

// Marked permutation graphs: a cubic graph made of two chordless m-cycles
// A = 0-1-...-(m-1)-0 and A' (same shape) joined by the perfect matching
// M = { A_i -- A'_sigma[i] }.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mpg {

enum class Side : std::uint8_t { A, APrime };

struct VertexRef {
  Side side = Side::A;
  int index = 0;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

/// Path along one of the two cycles, walked in increasing index order
/// (mod m) from `from` to `to`. from == to is the single vertex.
struct Arc {
  Side side = Side::A;
  int from = 0;
  int to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;

  /// Vertex indices on the arc, in traversal order.
  std::vector<int> vertices(int m) const;
  int length(int m) const { return ((to - from) % m + m) % m + 1; }
};

/// M-C4 on A_i, A_j, A'_sigma[j], A'_sigma[i] with j = i+1 mod m.
/// Only the A-side pair is stored.
struct FourCycle {
  int i = 0;
  int j = 0;

  friend bool operator==(const FourCycle&, const FourCycle&) = default;
  bool contains(int edge) const { return i == edge || j == edge; }
};

class MarkedPermutationGraph {
 public:
  /// Validating factory. Throws Error{TooSmall, LengthMismatch, NotAPermutation}.
  static MarkedPermutationGraph validate(int m, std::span<const int> sigma);
  static MarkedPermutationGraph validate(int m, std::initializer_list<int> sigma) {
    return validate(m, std::span<const int>(sigma.begin(), sigma.size()));
  }

  int m() const noexcept { return static_cast<int>(sigma_.size()); }
  int order() const noexcept { return 2 * m(); }
  const std::vector<int>& sigma() const noexcept { return sigma_; }
  const std::vector<int>& inverse() const noexcept { return inverse_; }
  int sigma(int i) const { return sigma_[static_cast<std::size_t>(i)]; }
  int sigma_inv(int j) const { return inverse_[static_cast<std::size_t>(j)]; }

  /// "m:s0,s1,..." - short stable identifier used in reports.
  std::string id() const;

  friend bool operator==(const MarkedPermutationGraph& l, const MarkedPermutationGraph& r) {
    return l.sigma_ == r.sigma_;
  }

 private:
  explicit MarkedPermutationGraph(std::vector<int> sigma);

  std::vector<int> sigma_;
  std::vector<int> inverse_;
};

using Mpg = MarkedPermutationGraph;

VertexRef friend_of(const Mpg& g, VertexRef v);

/// All M-C4s sorted by i. Adjacency of sigma values is tested mod m.
std::vector<FourCycle> enumerate_m_c4(const Mpg& g);

/// Cubic multigraph left after keeping only the matching edges in X and
/// suppressing every degree-2 vertex. Vertices 0..k-1 are the retained A
/// vertices in cyclic order, k..2k-1 the retained A' vertices in cyclic order.
struct SuppressedGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const;
};

/// Throws Error{TooFewEdges} if |X| < 2, IndexOutOfRange on bad indices.
SuppressedGraph suppress_match(const Mpg& g, std::span<const int> edges);

/// Shortest cycle length; parallel pair = 2, loop = 1. Throws Error{NoCycle}.
int girth(const SuppressedGraph& s);

/// 10 vertices, 3-regular, loop-free, girth 5: the unique (3,5)-cage.
bool is_petersen(const SuppressedGraph& s);

/// A sorted 5-set of A-indices whose matching edges form an M-copy of P10.
struct PetersenWitness {
  std::array<int, 5> edges{};

  bool contains(int e) const;
  friend bool operator==(const PetersenWitness&, const PetersenWitness&) = default;
  friend auto operator<=>(const PetersenWitness&, const PetersenWitness&) = default;
};

/// Convenience: is_petersen(suppress_match(g, X)) for |X| = 5.
bool is_m_p10(const Mpg& g, std::span<const int> edges);

// --- symmetry -------------------------------------------------------------

enum class SymmetryKind { RotateA, RotateAPrime, Reflect, SwapSides };

struct SymmetryOp {
  SymmetryKind kind = SymmetryKind::Reflect;
  int shift = 0;  // rotations only

  static SymmetryOp rotate_a(int k) { return {SymmetryKind::RotateA, k}; }
  static SymmetryOp rotate_a_prime(int k) { return {SymmetryKind::RotateAPrime, k}; }
  static SymmetryOp reflect() { return {SymmetryKind::Reflect, 0}; }
  static SymmetryOp swap_sides() { return {SymmetryKind::SwapSides, 0}; }
};

/// Relabels the instance. rotate_a(k): new A index i is old i+k.
/// rotate_a_prime(k): same on A'. reflect: i -> -i on both sides.
/// swap_sides: sigma -> sigma^-1.
Mpg apply_symmetry(const Mpg& g, SymmetryOp op);

/// New A-index of the matching edge that had A-index i in g.
int map_edge(const Mpg& g, SymmetryOp op, int i);

// --- cyclic edge connectivity ----------------------------------------------

struct GraphEdge {
  VertexRef u;
  VertexRef v;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Edges of G in fixed order: A-cycle (i, i+1), A'-cycle (j, j+1), matching i.
std::vector<GraphEdge> all_edges(const Mpg& g);

/// Smallest (by size, then lexicographic in all_edges order) edge cut of size
/// <= 4 leaving at least two components that contain a cycle.
std::optional<std::vector<GraphEdge>> find_small_cyclic_cut(const Mpg& g);

bool is_cyclically_5_edge_connected(const Mpg& g);

}  // namespace mpg
