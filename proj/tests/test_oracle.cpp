#include <random>

#include "doctest.h"
#include "plancol/oracle.hpp"
#include "test_common.hpp"

using namespace plancol;

namespace {

// local exhaustive oracle, independent of the solver under test
bool exhaustively_colorable(const SimpleGraph& g, const ThreeColoring& fixed) {
  std::vector<int> free_vs;
  for (int v = 0; v < g.n; ++v)
    if (fixed.color[v] == 0) free_vs.push_back(v);
  std::vector<Color> cur = fixed.color;
  std::vector<int> digit(free_vs.size(), 0);
  for (;;) {
    for (size_t i = 0; i < free_vs.size(); ++i) cur[free_vs[i]] = digit[i] + 1;
    bool proper = true;
    for (int u = 0; u < g.n && proper; ++u)
      for (int w : g.adj[u])
        if (w > u && cur[u] == cur[w]) proper = false;
    if (proper) return true;
    size_t i = 0;
    while (i < digit.size() && digit[i] == 2) digit[i++] = 0;
    if (i == digit.size()) return false;
    ++digit[i];
  }
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

// Mycielski construction over the 5-cycle: 11 vertices, triangle-free, not
// 3-colorable.
SimpleGraph mycielski_c5() {
  SimpleGraph g(11);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(5 + i, (i + 1) % 5);
    g.add_edge(5 + i, (i + 4) % 5);
    g.add_edge(5 + i, 10);
  }
  return g;
}

}  // namespace

TEST_CASE("solver basics") {
  CHECK_FALSE(solve_3coloring({complete_graph(4), ThreeColoring(4)}).has_value());
  CHECK(solve_3coloring({cycle_graph(6), ThreeColoring(6)}).has_value());
  CHECK(solve_3coloring({cycle_graph(7), ThreeColoring(7)}).has_value());
}

TEST_CASE("the Mycielski graph needs four colors") {
  SimpleGraph g = mycielski_c5();
  CHECK(find_triangles(g.adj).empty());
  CHECK_FALSE(solve_3coloring({g, ThreeColoring(11)}).has_value());
  CHECK_FALSE(exhaustively_colorable(g, ThreeColoring(11)));
}

TEST_CASE("solver respects and extends precolorings") {
  SimpleGraph c5 = cycle_graph(5);
  ThreeColoring pre(5);
  pre.color[0] = 1;
  pre.color[2] = 1;
  auto res = solve_3coloring({c5, pre});
  REQUIRE(res.has_value());
  CHECK(res->color[0] == 1);
  CHECK(res->color[2] == 1);
  CHECK(is_proper_total(c5.adj, *res));

  // an improper fixed part is an input error
  ThreeColoring clash(5);
  clash.color[0] = 2;
  clash.color[1] = 2;
  CHECK(test::code_of([&] { solve_3coloring({c5, clash}); }) == Errc::improper_coloring);
}

TEST_CASE("solver agrees with exhaustive search on random precolorings") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 7)(rng);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.45) g.add_edge(u, v);
    ThreeColoring pre(n);
    for (int v = 0; v < n; ++v)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.3)
        pre.color[v] = std::uniform_int_distribution<int>(1, 3)(rng);
    if (!is_proper(g.adj, pre)) continue;
    CHECK(solve_3coloring({g, pre}).has_value() == exhaustively_colorable(g, pre));
  }
}

TEST_CASE("criticality") {
  // the cycle alone extends trivially
  SimpleGraph c4 = cycle_graph(4);
  CycleRef c0({0, 1, 2, 3});
  ThreeColoring phi0(4);
  phi0.color = {1, 2, 1, 3};
  CHECK_FALSE(is_critical(c4, c0, phi0));

  // wheel-like example: a hub adjacent to all four cycle vertices, cycle
  // precolored with all three colors
  SimpleGraph w4 = cycle_graph(4);
  w4.adj.resize(5);
  w4.n = 5;
  for (int v = 0; v < 4; ++v) w4.add_edge(v, 4);
  ThreeColoring phi(5);
  phi.color = {1, 2, 1, 3, 0};
  CHECK(is_critical(w4, c0, phi));

  // with a two-colored cycle the hub survives, so nothing is critical
  ThreeColoring easy(5);
  easy.color = {1, 2, 1, 2, 0};
  CHECK_FALSE(is_critical(w4, c0, easy));
}

TEST_CASE("face statistic") {
  // wheel over a 4-cycle: four triangles plus the quadrilateral hub-less face
  std::vector<std::vector<int>> w4 = {
      {1, 4, 3}, {2, 4, 0}, {3, 4, 1}, {0, 4, 2}, {0, 1, 2, 3}};
  PlanarEmbedding e = build_embedding(w4);
  auto [sum_no_c0, tris] = mainlemma_statistic(e, std::nullopt);
  CHECK(sum_no_c0 == 0);  // every face has length at most four
  CHECK(tris == 4);
  auto [sum_c0, tris2] = mainlemma_statistic(e, CycleRef({0, 1, 2, 3}));
  CHECK(sum_c0 == 4);
  CHECK(tris2 == 4);

  // icosahedron: twenty triangles, nothing of length five or more
  std::vector<std::vector<int>> ico(12);
  auto u = [](int k) { return 1 + (k % 5 + 5) % 5; };
  auto l = [](int k) { return 6 + (k % 5 + 5) % 5; };
  ico[0] = {u(0), u(4), u(3), u(2), u(1)};
  ico[11] = {l(0), l(1), l(2), l(3), l(4)};
  for (int k = 0; k < 5; ++k) {
    ico[u(k)] = {0, u(k + 1), l(k), l(k - 1), u(k - 1)};
    ico[l(k)] = {u(k + 1), l(k + 1), 11, l(k - 1), u(k)};
  }
  PlanarEmbedding ie = build_embedding(ico);
  CHECK(ie.faces().size() == 20);
  auto [isum, itris] = mainlemma_statistic(ie, std::nullopt);
  CHECK(isum == 0);
  CHECK(itris == 20);
}

TEST_CASE("random proper colorings are proper and deterministic") {
  SimpleGraph c7 = cycle_graph(7);
  std::mt19937_64 a(7), b(7);
  ThreeColoring x = random_proper_coloring(c7.adj, a);
  ThreeColoring y = random_proper_coloring(c7.adj, b);
  CHECK(x.color == y.color);
  CHECK(is_proper_total(c7.adj, x));
}
