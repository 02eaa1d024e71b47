#pragma once

// The extremal family (G_k, M_k): m = 3k + 7, no M-C4, and only 6k + 6
// M-copies of P10. Matching edges come in three classes: vertical, skew, and
// two groups of four special edges.

#include <string>
#include <vector>

#include "mpg/graph.hpp"

namespace mpg {

enum class EdgeClass { Vertical, Skew, Special };

struct EdgeClassification {
  EdgeClass cls = EdgeClass::Vertical;
  int group = 0;  // 1 or 2 for special edges, 0 otherwise
  friend bool operator==(const EdgeClassification&, const EdgeClassification&) = default;
};

std::string_view class_name(EdgeClass c) noexcept;

struct GkInstance {
  int k = 0;
  Mpg graph;
  std::vector<EdgeClassification> classes;  // indexed by A-index

  /// A-indices of special group 1 or 2, ascending.
  std::vector<int> group(int id) const;
};

/// Throws Error{InvalidK} for k < 1.
GkInstance generate_gk(int k);

/// Throws Error{IndexOutOfRange}.
EdgeClassification classify_edge(const GkInstance& inst, int i);

struct GkVerdict {
  bool ok = false;
  int k = 0;
  int c4_count = 0;
  int p10_count = 0;
  int expected_p10 = 0;  // 6k + 6
  std::vector<std::string> discrepancies;
};

/// No M-C4, exactly 6k + 6 M-P10s, and each one is a full special group plus
/// one edge outside that group.
GkVerdict verify_gk(const GkInstance& inst, int jobs = 1);

}  // namespace mpg
