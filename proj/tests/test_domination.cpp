#include <doctest.h>

#include <random>

#include "domtriple/domination.hpp"
#include "domtriple/enumerate.hpp"
#include "domtriple/error.hpp"
#include "domtriple/families.hpp"
#include "domtriple/oracle.hpp"
#include "test_support.hpp"

using namespace domtriple;

namespace {
VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s = s.with(v);
  return s;
}
constexpr Variant kVariants[] = {Variant::plain, Variant::total, Variant::connected};

bool defined_for(Variant v, const Graph& g) {
  if (v == Variant::total) return !has_isolated_vertex(g);
  if (v == Variant::connected) return is_connected(g);
  return true;
}
}  // namespace

TEST_CASE("is_dominating") {
  const Graph c6 = cycle(6);
  CHECK(is_dominating(c6, set_of({0, 3})));
  CHECK_FALSE(is_dominating(c6, set_of({0, 1})));
  CHECK(is_dominating(c6, c6.vertices()));
  CHECK(is_dominating(figure_H(), figure_H().vertices()));
}

TEST_CASE("is_total_dominating") {
  CHECK(is_total_dominating(complete(5), set_of({1, 4})));
  CHECK_FALSE(is_total_dominating(cycle(6), set_of({0, 3})));
  CHECK(is_total_dominating(star(4), set_of({0, 2})));
}

TEST_CASE("is_connected_dominating") {
  const Graph p5 = path(5);
  CHECK(is_connected_dominating(p5, set_of({1, 2, 3})));
  CHECK_FALSE(is_connected_dominating(p5, set_of({1, 3})));
  CHECK(is_connected_dominating(Graph(1), set_of({0})));
}

TEST_CASE("domination_number examples") {
  CHECK(domination_number(cycle(9)).value == 3);
  CHECK(domination_number(figure_H()).value == 5);
  CHECK(domination_number(complete(7)).value == 1);
  CHECK(domination_number(complete(7)).certificate == set_of({0}));
}

TEST_CASE("total_domination_number examples and errors") {
  CHECK(total_domination_number(figure_H()).value == 10);
  CHECK(total_domination_number(cycle(8)).value == 4);
  CHECK_THROWS_AS(total_domination_number(Graph(1)), UndefinedParameter);
  try {
    total_domination_number(Graph(4, {{0, 1}, {1, 2}}));
    FAIL("expected UndefinedParameter");
  } catch (const UndefinedParameter& e) {
    CHECK(std::string(e.what()).find("vertex 3") != std::string::npos);
  }
}

TEST_CASE("connected_domination_number examples and errors") {
  CHECK(connected_domination_number(cycle(10)).value == 8);
  CHECK(connected_domination_number(figure_Gprime()).value == 2);
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_AS(connected_domination_number(two_triangles), UndefinedParameter);
}

TEST_CASE("parameter_triple examples") {
  const auto k5 = parameter_triple(complete(5));
  CHECK(k5.gamma == 1);
  CHECK(k5.gamma_t == 2);
  CHECK(k5.gamma_c == 1);

  const auto h = parameter_triple(figure_H());
  CHECK(h.gamma == 5);
  CHECK(h.gamma_t == 10);
  CHECK(h.gamma_c == 10);

  // P_4: brute force over all 16 subsets gives (2, 2, 2).
  const auto p4 = parameter_triple(path(4));
  CHECK(p4.gamma == 2);
  CHECK(p4.gamma_t == 2);
  CHECK(p4.gamma_c == 2);

  const auto k1 = parameter_triple(Graph(1));
  CHECK(k1.gamma == 1);
  CHECK_FALSE(k1.gamma_t);
  CHECK(k1.gamma_c == 1);

  const auto split = parameter_triple(Graph(4, {{0, 1}, {2, 3}}));
  CHECK(split.gamma == 2);
  CHECK(split.gamma_t == 4);
  CHECK_FALSE(split.gamma_c);
}

TEST_CASE("oracle examples") {
  CHECK(oracle_min_set(cycle(6), Variant::total).value == 4);
  CHECK(oracle_min_set(complete(2), Variant::connected).value == 1);
  CHECK(oracle_min_set(figure_Gprime(), Variant::plain).value == 2);
  CHECK_THROWS_AS(oracle_min_set(Graph(1), Variant::total), UndefinedParameter);
  CHECK_THROWS_AS(oracle_min_set(Graph(2), Variant::connected), UndefinedParameter);
  CHECK_THROWS_AS(oracle_min_set(Graph(31), Variant::plain), RangeError);
}

TEST_CASE("minimizers equal the oracle on every labeled connected graph up to 5 vertices") {
  // The n <= 7 sweep lives in the acceptance suite.
  long checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for_each_connected_graph(n, false, [&](const Graph& g) {
      for (auto v : kVariants) {
        if (!defined_for(v, g)) continue;
        REQUIRE(minimum_set(v, g).value == oracle_min_set(g, v).value);
      }
      ++checked;
      return true;
    });
  }
  CHECK(checked == 1 + 1 + 4 + 38 + 728);
}

TEST_CASE("certificates are valid and minimal on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = testing::random_graph(rng, n, 0.3 + (rng() % 50) / 100.0);
    for (auto v : kVariants) {
      if (!defined_for(v, g)) continue;
      const auto found = minimum_set(v, g);
      REQUIRE(found.certificate.subset_of(g.vertices()));
      CHECK(found.certificate.size() == found.value);
      CHECK(satisfies(v, g, found.certificate));
      // No subset one smaller works.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s(mask);
        if (s.size() == found.value - 1 && s.size() > 0) CHECK_FALSE(satisfies(v, g, s));
      }
    }
  }
}

TEST_CASE("classical chains hold on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = testing::random_graph(rng, n, 0.35);
    const auto t = parameter_triple(g);
    if (t.gamma_t) {
      CHECK(t.gamma <= *t.gamma_t);
      CHECK(*t.gamma_t <= 2 * t.gamma);
    }
    if (t.gamma_c) {
      CHECK(t.gamma <= *t.gamma_c);
      CHECK(*t.gamma_c <= 3 * t.gamma - 2);
    }
  }
}

TEST_CASE("adding an edge never increases the domination number") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = testing::random_graph(rng, n, 0.3);
    const int u = static_cast<int>(rng() % n);
    const int v = (u + 1 + static_cast<int>(rng() % (n - 1))) % n;
    CHECK(domination_number(g.with_edge(u, v)).value <= domination_number(g).value);
  }
}

TEST_CASE("search results are deterministic") {
  const Graph g = grid_p4(4);
  for (auto v : kVariants) CHECK(minimum_set(v, g) == minimum_set(v, g));
}

TEST_CASE("an expired deadline stops the search") {
  const Deadline expired = Deadline::after(std::chrono::duration<double>(-1.0));
  CHECK_THROWS_AS(connected_domination_number(grid_p4(5), expired), SearchTimeout);
}
