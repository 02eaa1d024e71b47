#include "mpg/family.hpp"

#include <algorithm>

#include "mpg/census.hpp"
#include "mpg/error.hpp"

namespace mpg {

std::string_view class_name(EdgeClass c) noexcept {
  switch (c) {
    case EdgeClass::Vertical: return "vertical";
    case EdgeClass::Skew: return "skew";
    case EdgeClass::Special: return "special";
  }
  return "unknown";
}

std::vector<int> GkInstance::group(int id) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].cls == EdgeClass::Special && classes[i].group == id) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

// 1-based construction, vertices 1..3k+7 on each side:
//   E1 (vertical): (2i-1) -> i,            1 <= i <= k
//                  (2k+i+3) -> (k+2i+3),   1 <= i <= k
//   E2 (skew):     (2i) -> (3k+4-2i),      1 <= i <= k-1
//   E3 (special):  2k -> k+2,  2k+1 -> k+4,  2k+2 -> k+1,  2k+3 -> k+3,
//                  3k+4 -> 3k+5,  3k+5 -> 3k+7,  3k+6 -> 3k+4,  3k+7 -> 3k+6
// Everything below is shifted to 0-based indices.
GkInstance generate_gk(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidK, "k must be at least 1", {{"k", k}});
  const int m = 3 * k + 7;
  std::vector<int> sigma(static_cast<std::size_t>(m), -1);
  std::vector<EdgeClassification> classes(static_cast<std::size_t>(m));
  auto set = [&](int i, int target, EdgeClassification c) {
    sigma[static_cast<std::size_t>(i)] = target;
    classes[static_cast<std::size_t>(i)] = c;
  };
  const EdgeClassification vertical{EdgeClass::Vertical, 0};
  const EdgeClassification skew{EdgeClass::Skew, 0};
  const EdgeClassification group1{EdgeClass::Special, 1};
  const EdgeClassification group2{EdgeClass::Special, 2};

  for (int i = 1; i <= k; ++i) {
    set(2 * i - 2, i - 1, vertical);
    set(2 * k + i + 2, k + 2 * i + 2, vertical);
  }
  for (int i = 1; i <= k - 1; ++i) set(2 * i - 1, 3 * k + 3 - 2 * i, skew);

  set(2 * k - 1, k + 1, group1);
  set(2 * k, k + 3, group1);
  set(2 * k + 1, k, group1);
  set(2 * k + 2, k + 2, group1);
  set(3 * k + 3, 3 * k + 4, group2);
  set(3 * k + 4, 3 * k + 6, group2);
  set(3 * k + 5, 3 * k + 3, group2);
  set(3 * k + 6, 3 * k + 5, group2);

  return GkInstance{k, Mpg::validate(m, sigma), std::move(classes)};
}

EdgeClassification classify_edge(const GkInstance& inst, int i) {
  if (i < 0 || i >= static_cast<int>(inst.classes.size())) {
    throw Error(ErrorCode::IndexOutOfRange, "edge index out of range",
                {{"index", i}, {"m", inst.classes.size()}});
  }
  return inst.classes[static_cast<std::size_t>(i)];
}

GkVerdict verify_gk(const GkInstance& inst, int jobs) {
  GkVerdict v;
  v.k = inst.k;
  v.expected_p10 = 6 * inst.k + 6;
  const auto c4 = enumerate_m_c4(inst.graph);
  const auto p10 = enumerate_m_p10(inst.graph, jobs);
  v.c4_count = static_cast<int>(c4.size());
  v.p10_count = static_cast<int>(p10.size());

  if (v.c4_count != 0) {
    v.discrepancies.push_back("expected no M-C4, found " + std::to_string(v.c4_count));
  }
  if (v.p10_count != v.expected_p10) {
    v.discrepancies.push_back("expected " + std::to_string(v.expected_p10) + " M-P10s, found " +
                              std::to_string(v.p10_count));
  }
  const auto g1 = inst.group(1);
  const auto g2 = inst.group(2);
  auto holds_group = [](const PetersenWitness& w, const std::vector<int>& group) {
    return group.size() == 4 &&
           std::all_of(group.begin(), group.end(), [&](int e) { return w.contains(e); });
  };
  for (const auto& w : p10) {
    if (!holds_group(w, g1) && !holds_group(w, g2)) {
      std::string s = "witness without a full special group: {";
      for (std::size_t i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(w.edges[i]);
      v.discrepancies.push_back(s + "}");
    }
  }
  v.ok = v.discrepancies.empty();
  return v;
}

}  // namespace mpg
