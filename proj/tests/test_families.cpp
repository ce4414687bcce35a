#include <doctest.h>

#include "domtriple/domination.hpp"
#include "domtriple/error.hpp"
#include "domtriple/families.hpp"

using namespace domtriple;

TEST_CASE("basic constructors") {
  CHECK(cycle(3) == complete(3));
  CHECK(path(2) == complete(2));
  CHECK(star(4).degree_sequence() == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(path(1) == Graph(1));
  CHECK(cycle(5).has_edge(4, 0));
  CHECK_THROWS_AS(cycle(2), RangeError);
  CHECK_THROWS_AS(path(0), RangeError);
  CHECK_THROWS_AS(complete(0), RangeError);
  CHECK_THROWS_AS(star(0), RangeError);
}

TEST_CASE("cartesian products") {
  CHECK(cartesian_product(complete(2), complete(2)) == Graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}));
  CHECK(cartesian_product(complete(2), complete(2)).degree_sequence() == cycle(4).degree_sequence());

  const Graph g23 = cartesian_product(path(2), path(3));
  CHECK(g23.order() == 6);
  CHECK(g23.size() == 7);

  const Graph g44 = grid_p4(4);
  CHECK(g44.order() == 16);
  CHECK(g44.size() == 24);

  // Row-major, rows from the first factor: (1, 2) in P_4□P_5 is index 7.
  const Graph g45 = grid_p4(5);
  CHECK(g45.has_edge(7, 2));
  CHECK(g45.has_edge(7, 12));
  CHECK(g45.has_edge(7, 6));
  CHECK(g45.has_edge(7, 8));
  CHECK(g45.degree(7) == 4);

  CHECK_THROWS_AS(cartesian_product(path(9), path(8)), RangeError);
}

TEST_CASE("cartesian product commutes under the coordinate swap") {
  const Graph a = cycle(4);
  const Graph b = path(3);
  const Graph ab = cartesian_product(a, b);
  const Graph ba = cartesian_product(b, a);
  const int na = a.order();
  const int nb = b.order();
  auto swap_index = [&](int idx) { return (idx % nb) * na + idx / nb; };  // (u, v) -> (v, u)
  REQUIRE(ab.size() == ba.size());
  for (auto [x, y] : ab.edges()) CHECK(ba.has_edge(swap_index(x), swap_index(y)));
}

TEST_CASE("figure H is the 15-vertex tree") {
  const Graph h = figure_H();
  CHECK(h.order() == 15);
  CHECK(h.size() == 14);
  CHECK(is_connected(h));  // connected with n - 1 edges: a tree
  int leaves = 0;
  for (int v = 0; v < 15; ++v) leaves += h.degree(v) == 1;
  CHECK(leaves == 5);
  CHECK(h.degree(1) == 5);
}

TEST_CASE("figure G' is the subdivided triangle with its inner triangle") {
  const Graph g = figure_Gprime();
  CHECK(g.order() == 6);
  CHECK(g.size() == 9);
  CHECK(g.degree_sequence() == std::vector<int>{4, 4, 4, 2, 2, 2});
  for (int corner = 0; corner < 3; ++corner) CHECK(g.degree(corner) == 2);
  // 2-connected: no single vertex removal disconnects it.
  for (int cut = 0; cut < 6; ++cut) {
    const VertexSet rest = g.vertices().without(cut);
    CHECK(reachable(g, VertexSet::singleton(rest.front()), rest) == rest);
  }
}

TEST_CASE("cycle formulas") {
  CHECK(gamma_cycle(9) == 3);
  CHECK(gamma_c_cycle(9) == 7);
  CHECK(gamma_cycle(3) == 1);
  CHECK(gamma_c_cycle(3) == 1);
  CHECK(gamma_t_cycle(8) == 4);
  CHECK(gamma_t_cycle(6) == 4);
  CHECK(gamma_t_cycle(7) == 4);
  CHECK_THROWS_AS(gamma_t_cycle(2), RangeError);
  for (int n = 3; n <= 12; ++n) {
    const Graph c = cycle(n);
    CHECK(domination_number(c).value == gamma_cycle(n));
    CHECK(total_domination_number(c).value == gamma_t_cycle(n));
    CHECK(connected_domination_number(c).value == gamma_c_cycle(n));
  }
}

TEST_CASE("grid formulas") {
  CHECK(gamma_p4grid(4) == 4);
  CHECK(gamma_p4grid(5) == 6);
  CHECK(gamma_p4grid(9) == 10);
  CHECK(gamma_p4grid(7) == 7);
  CHECK(gamma_t_p4grid(4) == 6);
  CHECK(gamma_t_p4grid(5) == 8);
  CHECK(gamma_c_p4grid(4) == 7);
  CHECK(gamma_c_p4grid(6) == 10);
  CHECK(gamma_t_p3grid(5) == 5);
  CHECK(gamma_c_p3grid(3) == 3);

  CHECK_THROWS_AS(gamma_p4grid(0), RangeError);
  CHECK_THROWS_AS(gamma_t_p4grid(3), RangeError);
  CHECK_THROWS_AS(gamma_c_p4grid(3), RangeError);
  CHECK_THROWS_AS(gamma_t_p3grid(2), RangeError);
  CHECK_THROWS_AS(gamma_c_p3grid(2), RangeError);

  CHECK(domination_number(grid_p4(4)).value == gamma_p4grid(4));
  CHECK(total_domination_number(grid_p4(4)).value == gamma_t_p4grid(4));
  CHECK(connected_domination_number(grid_p4(4)).value == gamma_c_p4grid(4));
  CHECK(total_domination_number(grid_p3(4)).value == gamma_t_p3grid(4));
  CHECK(connected_domination_number(grid_p3(4)).value == gamma_c_p3grid(4));
}

TEST_CASE("family specs") {
  CHECK(FamilySpec::parse("cycle:9").build() == cycle(9));
  CHECK(FamilySpec::parse("grid_p4:5").build() == grid_p4(5));
  CHECK(FamilySpec::parse("figure_H").build() == figure_H());
  CHECK(FamilySpec::parse("path:3*cycle:4").build() == cartesian_product(path(3), cycle(4)));
  CHECK(FamilySpec::parse("path:2*path:2*path:2").build().order() == 8);
  CHECK(FamilySpec::parse("star:4").to_string() == "star:4");
  CHECK(FamilySpec::parse("path:3*cycle:4").to_string() == "path:3*cycle:4");

  CHECK_THROWS_AS(FamilySpec::parse("wheel:5"), RangeError);
  CHECK_THROWS_AS(FamilySpec::parse("cycle"), RangeError);
  CHECK_THROWS_AS(FamilySpec::parse("cycle:x"), RangeError);
  CHECK_THROWS_AS(FamilySpec::parse("figure_H:3"), RangeError);
  CHECK_THROWS_AS(FamilySpec::parse("cycle:2").build(), RangeError);

  CHECK(looks_like_family_spec("grid_p3:4"));
  CHECK(looks_like_family_spec("figure_Gprime"));
  CHECK_FALSE(looks_like_family_spec("D?{"));
}

TEST_CASE("every family cross-check matches") {
  for (const auto& c : cross_check_families()) {
    INFO(c.graph << " " << c.parameter);
    CHECK(c.matches());
  }
}
