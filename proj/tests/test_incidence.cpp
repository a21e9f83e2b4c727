#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "veldkamp/incidence.hpp"

using namespace veld;

namespace {

std::vector<std::pair<int, int>> lines_of(const IncidenceStructure& s) {
  return s.lines();
}

}  // namespace

TEST_CASE("extended D diagrams have the expected lines") {
  auto d4 = build_extended_dynkin_d(4);
  CHECK(d4.point_count() == 5);
  CHECK(lines_of(d4) ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 3}, {2, 4}});

  auto d5 = build_extended_dynkin_d(5);
  CHECK(lines_of(d5) ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});

  auto d7 = build_extended_dynkin_d(7);
  CHECK(lines_of(d7) == std::vector<std::pair<int, int>>{
                            {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}});

  CHECK_THROWS_AS(build_extended_dynkin_d(3), std::invalid_argument);
}

TEST_CASE("diagram size and order profile") {
  for (int n = 4; n <= 12; ++n) {
    auto s = build_extended_dynkin_d(n);
    CHECK(s.point_count() == n + 1);
    CHECK(static_cast<int>(s.lines().size()) == n);
  }
  // For n >= 5: four points of order one, two of order three, n-5 of order two.
  for (int n = 5; n <= 12; ++n) {
    auto s = build_extended_dynkin_d(n);
    int order1 = 0, order2 = 0, order3 = 0;
    for (int p = 0; p <= n; ++p) {
      switch (point_order(s, p)) {
        case 1: ++order1; break;
        case 2: ++order2; break;
        case 3: ++order3; break;
        default: FAIL("unexpected point order");
      }
    }
    CHECK(order1 == 4);
    CHECK(order3 == 2);
    CHECK(order2 == n - 5);
  }
}

TEST_CASE("point orders") {
  auto d4 = build_extended_dynkin_d(4);
  CHECK(point_order(d4, 2) == 4);
  auto d6 = build_extended_dynkin_d(6);
  CHECK(point_order(d6, 3) == 2);
  auto d5 = build_extended_dynkin_d(5);
  CHECK(point_order(d5, 0) == 1);
  CHECK_THROWS_AS(point_order(d4, 5), std::invalid_argument);
}

TEST_CASE("edge list parsing") {
  auto s = parse_edge_list("0 2\n1 2\n2 3\n2 4");
  CHECK(s == build_extended_dynkin_d(4));

  auto k2 = parse_edge_list("# comment\n0 1");
  CHECK(k2.point_count() == 2);
  CHECK(k2.lines().size() == 1);

  CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# only comments\n\n"), ParseError);

  try {
    parse_edge_list("0 1\n2 2");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("sparse ids are compacted with a reported mapping") {
  std::vector<std::string> warnings;
  auto s = parse_edge_list("0 5\n5 9", &warnings);
  CHECK(s.point_count() == 3);
  CHECK(lines_of(s) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("5->1") != std::string::npos);
  CHECK(warnings[0].find("9->2") != std::string::npos);
}

TEST_CASE("construction rejects invalid structures") {
  CHECK_THROWS_AS(IncidenceStructure(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 1}, {1, 0}}), std::invalid_argument);

  // Isolated points are allowed but reported.
  IncidenceStructure s(4, {{0, 1}});
  CHECK(s.isolated_points() == std::vector<int>{2, 3});
}

TEST_CASE("emit and parse round-trip") {
  for (int n = 4; n <= 9; ++n) {
    auto s = build_extended_dynkin_d(n);
    CHECK(parse_edge_list(emit_edge_list(s)) == s);
  }

  std::mt19937 rng(20240517);
  for (int trial = 0; trial < 50; ++trial) {
    const int points = 2 + static_cast<int>(rng() % 11);
    std::set<std::pair<int, int>> edges;
    const int max_edges = points * (points - 1) / 2;
    const int wanted =
        1 + static_cast<int>(rng() % std::min(2 * points, max_edges));
    while (static_cast<int>(edges.size()) < wanted) {
      int a = static_cast<int>(rng() % points);
      int b = static_cast<int>(rng() % points);
      if (a == b) continue;
      edges.insert({std::min(a, b), std::max(a, b)});
    }
    // Make ids dense so the round-trip is exact.
    std::set<int> used;
    for (auto [a, b] : edges) {
      used.insert(a);
      used.insert(b);
    }
    std::map<int, int> remap;
    int next = 0;
    for (int v : used) remap[v] = next++;
    std::vector<std::pair<int, int>> dense;
    for (auto [a, b] : edges) dense.emplace_back(remap[a], remap[b]);
    IncidenceStructure s(next, dense);
    CHECK(parse_edge_list(emit_edge_list(s)) == s);
  }
}
