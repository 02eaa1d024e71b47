#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "mpg/census.hpp"
#include "mpg/family.hpp"
#include "mpg/text_format.hpp"
#include "mpg/witness.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mpg;
using testing_support::all_instances;
using testing_support::code_of;

namespace {

bool precondition_holds(const Mpg& g, int e) {
  const auto c4 = enumerate_m_c4(g);
  return std::all_of(c4.begin(), c4.end(), [&](const FourCycle& c) { return c.contains(e); });
}

const Error& caught(auto&& fn, std::optional<Error>& slot) {
  try {
    fn();
  } catch (const Error& e) {
    slot.emplace(e);
  }
  REQUIRE(slot.has_value());
  return *slot;
}

}  // namespace

TEST_CASE("c4_reduce examples") {
  const auto r = c4_reduce(Mpg::validate(4, {0, 1, 2, 3}), 0, 1);
  CHECK(r.graph == Mpg::validate(3, {0, 1, 2}));
  CHECK(r.anchor == 0);
  CHECK(r.origin == std::vector<int>{0, 2, 3});

  CHECK(code_of([] { c4_reduce(fixtures::petersen(), 0, 1); }) == ErrorCode::NotAC4ThroughE);
  CHECK(code_of([] { c4_reduce(fixtures::prism(), 0, 1); }) == ErrorCode::TooSmall);
  CHECK(code_of([] { c4_reduce(Mpg::validate(4, {0, 1, 2, 3}), 0, 2); }) ==
        ErrorCode::NotAC4ThroughE);
}

TEST_CASE("c4_reduce keeps every remaining M-C4 on the anchor") {
  for (int m = 4; m <= 7; ++m) {
    for (const auto& g : all_instances(m)) {
      for (int a = 0; a < m; ++a) {
        if (!precondition_holds(g, a)) continue;
        for (const auto& c : enumerate_m_c4(g)) {
          const int z = c.i == a ? c.j : c.i;
          const auto r = c4_reduce(g, a, z);
          REQUIRE(r.graph.m() == m - 1);
          REQUIRE(precondition_holds(r.graph, r.anchor));
        }
      }
    }
  }
}

TEST_CASE("twin_contract examples") {
  const auto r1 = twin_contract(Mpg::validate(4, {0, 1, 2, 3}), 0, TwinPair{1, 2, TwinKind::False});
  CHECK(r1.graph == Mpg::validate(3, {0, 1, 2}));
  CHECK(r1.origin == std::vector<int>{0, 1, 2});

  const auto r2 =
      twin_contract(Mpg::validate(5, {0, 4, 3, 2, 1}), 0, TwinPair{1, 2, TwinKind::True});
  CHECK(r2.graph == Mpg::validate(3, {0, 2, 1}));
  CHECK(r2.origin == std::vector<int>{0, 1, 2});

  const auto r3 =
      twin_contract(Mpg::validate(5, {0, 1, 2, 3, 4}), 0, TwinPair{1, 2, TwinKind::False});
  CHECK(r3.graph == Mpg::validate(3, {0, 1, 2}));
}

TEST_CASE("twin_contract errors") {
  CHECK(code_of([] { twin_contract(fixtures::petersen(), 0, TwinPair{1, 2, TwinKind::False}); }) ==
        ErrorCode::NotTwins);
  CHECK(code_of([] { twin_contract(fixtures::petersen(), 0, TwinPair{0, 2, TwinKind::False}); }) ==
        ErrorCode::NotTwins);
  // on (4, id) with anchor 0 the pair (1, 3) leaves only 2 outside, but 3 and 0
  // are adjacent on the cycle, so yCx has no internal vertex other than a
  std::optional<Error> slot;
  const auto& e = caught(
      [] { twin_contract(Mpg::validate(4, {0, 1, 2, 3}), 0, TwinPair{1, 3, TwinKind::False}); },
      slot);
  CHECK(e.code() == ErrorCode::DegenerateArc);
  CHECK(e.certificate().at("c4") == nlohmann::json::array({3, 0}));
}

TEST_CASE("matched_arc orientation depends on twin kind") {
  const auto g = Mpg::validate(5, {0, 4, 3, 2, 1});
  CHECK(matched_arc(g, 1, 2, TwinKind::True) == Arc{Side::APrime, 3, 4});
  CHECK(matched_arc(g, 1, 2, TwinKind::False) == Arc{Side::APrime, 4, 3});
}

TEST_CASE("p10_from_p4 examples") {
  const auto w = p10_from_p4(fixtures::petersen(), 0, InducedPath4{{1, 3, 2, 4}});
  CHECK(w.edges == std::array<int, 5>{0, 1, 2, 3, 4});
  CHECK(code_of([] { p10_from_p4(fixtures::petersen(), 0, InducedPath4{{1, 2, 3, 4}}); }) ==
        ErrorCode::NotAnInducedP4);
}

TEST_CASE("every induced P4 of every crossing graph gives an M-P10") {
  for (int m = 5; m <= 7; ++m) {
    for (const auto& g : all_instances(m)) {
      for (int a = 0; a < m; ++a) {
        const auto p = find_induced_p4(build_crossing_graph(g, a));
        if (!p) continue;
        const auto w = p10_from_p4(g, a, *p);
        REQUIRE(w.contains(a));
        REQUIRE(oracle::is_m_p10(g, {w.edges.begin(), w.edges.end()}));
      }
    }
  }
}

TEST_CASE("find_p10_through examples") {
  const auto r = find_p10_through(fixtures::petersen(), 0);
  CHECK(r.witness.edges == std::array<int, 5>{0, 1, 2, 3, 4});
  REQUIRE(r.trace.steps.size() == 1);
  CHECK(r.trace.steps[0] == TraceStep{P4FoundStep{5, 0, InducedPath4{{1, 3, 2, 4}}}});

  std::optional<Error> slot;
  const auto& e = caught([] { find_p10_through(fixtures::prism(), 0); }, slot);
  CHECK(e.code() == ErrorCode::PreconditionViolated);
  CHECK(e.certificate().at("c4") == nlohmann::json::array({1, 2}));
  CHECK(e.certificate().at("edge") == 0);

  CHECK(code_of([] { find_p10_through(fixtures::petersen(), 5); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("witnesses exist for every admissible edge up to m = 7 and replay") {
  int runs = 0;
  int with_reduce = 0;
  for (int m = 3; m <= 7; ++m) {
    for (const auto& g : all_instances(m)) {
      std::optional<std::vector<PetersenWitness>> all;
      for (int e = 0; e < m; ++e) {
        if (!precondition_holds(g, e)) {
          CHECK(code_of([&] { find_p10_through(g, e); }) == ErrorCode::PreconditionViolated);
          continue;
        }
        const auto r = find_p10_through(g, e);
        ++runs;
        REQUIRE(r.witness.contains(e));
        REQUIRE(oracle::is_m_p10(g, {r.witness.edges.begin(), r.witness.edges.end()}));
        REQUIRE(replay(g, e, r.trace) == r.witness);
        REQUIRE(std::holds_alternative<P4FoundStep>(r.trace.steps.back()));
        int prev_m = m + 1;
        for (const auto& s : r.trace.steps) {
          const int sm = std::visit([](const auto& v) { return v.m; }, s);
          REQUIRE(sm < prev_m);
          prev_m = sm;
          with_reduce += std::holds_alternative<C4ReduceStep>(s) ? 1 : 0;
        }
        if (!all) all = enumerate_m_p10(g);
        REQUIRE(std::binary_search(all->begin(), all->end(), r.witness));
      }
    }
  }
  CHECK(runs > 4000);
  CHECK(with_reduce > 0);
}

TEST_CASE("twin blocks are matched exactly onto Q'") {
  int checked = 0;
  for (int m = 4; m <= 7; ++m) {
    for (const auto& g : all_instances(m)) {
      for (int a = 0; a < m; ++a) {
        const auto h = build_crossing_graph(g, a);
        for (int x = 0; x < m; ++x) {
          for (int y = 0; y < m; ++y) {
            if (x == a || y == a || x == y || !are_twins(h, x, y)) continue;
            // x first when walking the A-cycle from a
            if ((x - a + m) % m > (y - a + m) % m) continue;
            const auto kind = h.adjacent(x, y) ? TwinKind::True : TwinKind::False;
            std::set<int> image;
            for (int v : Arc{Side::A, x, y}.vertices(m)) image.insert(g.sigma(v));
            const auto q = matched_arc(g, x, y, kind).vertices(m);
            REQUIRE(image == std::set<int>(q.begin(), q.end()));
            if ((y - a + m) % m == m - 1 && (x - a + m) % m == 1) continue;  // yCx = y a x
            const auto r = twin_contract(g, a, TwinPair{x, y, kind});
            REQUIRE(r.graph.m() < m);
            REQUIRE(r.graph.m() == static_cast<int>(image.size()) + 1);
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("C4-free instances never have a P4-free crossing graph") {
  // so the engine, which reduces every M-C4 first, always ends in P4Found
  for (int m = 4; m <= 8; ++m) {
    for (const auto& g : all_instances(m)) {
      if (!enumerate_m_c4(g).empty()) continue;
      for (int a = 0; a < m; ++a) REQUIRE(find_induced_p4(build_crossing_graph(g, a)).has_value());
    }
  }
}

TEST_CASE("trace replay rejects a trace for another instance") {
  const auto r = find_p10_through(fixtures::petersen(), 0);
  CHECK(code_of([&] { replay(fixtures::petersen(), 1, r.trace); }) ==
        ErrorCode::InternalInvariantViolated);
  CHECK(code_of([&] { replay(fixtures::petersen(), 0, ReductionTrace{}); }) ==
        ErrorCode::InternalInvariantViolated);
}

TEST_CASE("G_1 witnesses are one edge plus a special group") {
  const auto inst = generate_gk(1);
  const auto g1 = inst.group(1);
  const auto g2 = inst.group(2);
  for (int e = 0; e < inst.graph.m(); ++e) {
    if (inst.classes[static_cast<std::size_t>(e)].cls == EdgeClass::Special) continue;
    const auto r = find_p10_through(inst.graph, e);
    std::vector<int> rest;
    for (int v : r.witness.edges) {
      if (v != e) rest.push_back(v);
    }
    CHECK((rest == g1 || rest == g2));
  }
}

TEST_CASE("cyclically 5-edge-connected instances have witnesses on every edge") {
  int seen = 0;
  for (int m = 5; m <= 7; ++m) {
    for (const auto& g : all_instances(m)) {
      if (!is_cyclically_5_edge_connected(g)) continue;
      ++seen;
      for (int e = 0; e < m; ++e) {
        REQUIRE(precondition_holds(g, e));
        REQUIRE(find_p10_through(g, e).witness.contains(e));
      }
    }
  }
  CHECK(seen > 0);
}
