#include <doctest.h>

#include <utility>
#include <vector>

#include "mpg/census.hpp"
#include "mpg/crossing.hpp"
#include "mpg/text_format.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mpg;
using testing_support::all_instances;
using testing_support::code_of;

using EdgeList = std::vector<std::pair<int, int>>;

TEST_CASE("crossing graph examples") {
  const auto h = build_crossing_graph(fixtures::petersen(), 0);
  CHECK(h.vertices() == std::vector<int>{1, 2, 3, 4});
  CHECK(h.edges() == EdgeList{{1, 3}, {2, 3}, {2, 4}});
  CHECK(h.edge_count() == 3);

  const auto id4 = build_crossing_graph(Mpg::validate(4, {0, 1, 2, 3}), 0);
  CHECK(id4.edge_count() == 0);

  const auto rev = build_crossing_graph(Mpg::validate(5, {0, 4, 3, 2, 1}), 0);
  CHECK(rev.edges() == EdgeList{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("crossing graph of the prism") {
  for (int a = 0; a < 3; ++a) {
    const auto h = build_crossing_graph(fixtures::prism(), a);
    CHECK(h.vertices().size() == 2);
    CHECK(h.edge_count() == 0);
  }
}

TEST_CASE("crossing graph excludes the anchor and is symmetric") {
  const auto g = Mpg::validate(6, {3, 0, 5, 1, 4, 2});
  for (int a = 0; a < 6; ++a) {
    const auto h = build_crossing_graph(g, a);
    CHECK(h.anchor() == a);
    for (int x = 0; x < 6; ++x) {
      CHECK_FALSE(h.adjacent(a, x));
      CHECK_FALSE(h.adjacent(x, x));
      for (int y = 0; y < 6; ++y) CHECK(h.adjacent(x, y) == h.adjacent(y, x));
    }
  }
}

TEST_CASE("crossing graph agrees with the cyclic order oracle") {
  for (int m = 3; m <= 7; ++m) {
    for (const auto& g : all_instances(m)) {
      for (int a = 0; a < m; ++a) {
        const auto h = build_crossing_graph(g, a);
        for (int x = 0; x < m; ++x) {
          for (int y = x + 1; y < m; ++y) {
            if (x == a || y == a) continue;
            REQUIRE(h.adjacent(x, y) == oracle::crossing_by_cyclic_order(g, a, x, y));
          }
        }
      }
    }
  }
}

TEST_CASE("from_edges round trips") {
  const auto h = build_crossing_graph(fixtures::petersen(), 2);
  const auto e = h.edges();
  CHECK(CrossingGraph::from_edges(5, 2, e) == h);
}

TEST_CASE("rotated positions put the anchor first") {
  const auto g = Mpg::validate(5, {2, 4, 1, 0, 3});
  const auto pos = rotated_positions(g, 3);
  const auto fpos = rotated_friend_positions(g, 3);
  CHECK(pos == std::vector<std::int32_t>{2, 3, 4, 0, 1});
  // sigma[3] = 0, so A' positions are the sigma values themselves
  CHECK(fpos == std::vector<std::int32_t>{2, 4, 1, 0, 3});
}

TEST_CASE("redrawing relation holds between every pair of anchors") {
  // ax in H_b iff bx in H_a, for x outside {a, b}
  for (int m = 4; m <= 7; ++m) {
    for (const auto& g : all_instances(m)) {
      std::vector<CrossingGraph> hs;
      for (int a = 0; a < m; ++a) hs.push_back(build_crossing_graph(g, a));
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          if (a == b) continue;
          for (int x = 0; x < m; ++x) {
            if (x == a || x == b) continue;
            REQUIRE(hs[static_cast<std::size_t>(b)].adjacent(a, x) ==
                    hs[static_cast<std::size_t>(a)].adjacent(b, x));
          }
        }
      }
    }
  }
}

TEST_CASE("drawing formats parse case-insensitively") {
  CHECK(parse_drawing_format("svg") == DrawingFormat::Svg);
  CHECK(parse_drawing_format("SVG") == DrawingFormat::Svg);
  CHECK(parse_drawing_format("Dot") == DrawingFormat::Dot);
  CHECK(code_of([] { parse_drawing_format("png"); }) == ErrorCode::UnsupportedFormat);
}

TEST_CASE("drawing crossings match the crossing graph") {
  CHECK(oracle::svg_matching_crossings(standard_drawing(fixtures::petersen(), 0, DrawingFormat::Svg)) == 3);
  CHECK(oracle::dot_matching_crossings(standard_drawing(fixtures::petersen(), 0, DrawingFormat::Dot)) == 3);
  CHECK(oracle::svg_matching_crossings(standard_drawing(fixtures::prism(), 1, DrawingFormat::Svg)) == 0);
  const auto rev = Mpg::validate(5, {0, 4, 3, 2, 1});
  CHECK(oracle::dot_matching_crossings(standard_drawing(rev, 0, DrawingFormat::Dot)) == 6);

  SplitMix64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const int m = 3 + static_cast<int>(rng.below(10));
    const auto g = random_instance(m, rng.next());
    const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    const int expected = build_crossing_graph(g, a).edge_count();
    CHECK(oracle::svg_matching_crossings(standard_drawing(g, a, DrawingFormat::Svg)) == expected);
    CHECK(oracle::dot_matching_crossings(standard_drawing(g, a, DrawingFormat::Dot)) == expected);
  }
}

TEST_CASE("drawings are annotated with the crossing count") {
  const auto svg = standard_drawing(fixtures::petersen(), 0, DrawingFormat::Svg);
  CHECK(svg.find("<!-- crossings: 3 -->") != std::string::npos);
  CHECK(svg.find("<svg") != std::string::npos);
  const auto dot = standard_drawing(fixtures::petersen(), 0, DrawingFormat::Dot);
  CHECK(dot.find("// crossings: 3") != std::string::npos);
}

TEST_CASE("out of range anchor is rejected") {
  CHECK(code_of([] { build_crossing_graph(fixtures::petersen(), 5); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { standard_drawing(fixtures::petersen(), -1, DrawingFormat::Svg); }) ==
        ErrorCode::IndexOutOfRange);
}
