#pragma once

// Crossing graph H_a: vertices are the A-indices other than the anchor a;
// x ~ y iff the matching segments of x and y cross in the standard drawing
// (A laid out left to right starting at a, A' starting at sigma[a]).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpg/graph.hpp"

namespace mpg {

class CrossingGraph {
 public:
  /// Arbitrary graph on {0..m-1} \ {anchor}; used for fixtures and tests.
  static CrossingGraph from_edges(int m, int anchor, std::span<const std::pair<int, int>> edges);

  int m() const noexcept { return m_; }
  int anchor() const noexcept { return anchor_; }

  bool adjacent(int x, int y) const {
    return adj_[static_cast<std::size_t>(x) * static_cast<std::size_t>(m_) +
                static_cast<std::size_t>(y)] != 0;
  }

  /// Vertex labels in increasing order (anchor excluded).
  std::vector<int> vertices() const;
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  friend bool operator==(const CrossingGraph&, const CrossingGraph&) = default;

 private:
  friend CrossingGraph build_crossing_graph(const Mpg& g, int anchor);
  CrossingGraph(int m, int anchor)
      : m_(m), anchor_(anchor), adj_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0) {}

  int m_;
  int anchor_;
  std::vector<std::uint8_t> adj_;  // dense m x m, row/column `anchor` all zero
};

/// Throws Error{IndexOutOfRange} for a bad anchor.
CrossingGraph build_crossing_graph(const Mpg& g, int anchor);

/// Rotated positions: pos[v] = (v - a) mod m, fpos[v] = (sigma[v] - sigma[a]) mod m.
std::vector<std::int32_t> rotated_positions(const Mpg& g, int anchor);
std::vector<std::int32_t> rotated_friend_positions(const Mpg& g, int anchor);

enum class DrawingFormat { Svg, Dot };

/// "svg" / "dot" (case-insensitive). Throws Error{UnsupportedFormat}.
DrawingFormat parse_drawing_format(std::string_view name);

/// Two-row layout with unit horizontal spacing and a row gap of 10; A on top.
/// The document carries a "crossings: N" comment.
std::string standard_drawing(const Mpg& g, int anchor, DrawingFormat format);

}  // namespace mpg
