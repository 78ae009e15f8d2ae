#include <algorithm>
#include <set>
#include <variant>

#include "doctest.h"
#include "plancol/generate.hpp"
#include "plancol/gridext.hpp"
#include "plancol/tightgeo.hpp"
#include "test_common.hpp"

using namespace plancol;

namespace {

BfsLayers cuff_layers(const CylGrid& g) { return bfs_layers(g.emb, g.hoop(1)); }

// wheel-and-towers host: a 6x3 grid rings a, m, b; a chord across the b ring
// splits the outside into two pockets, each filled with nine nested
// 4-rings.  Growing from the m ring forces one restart at the chorded b
// ring.
PlanarEmbedding restart_host() {
  CylGrid base = make_grid(6, 3);
  RotationTable rot = add_chord(base.emb.rotations(), base.vertex(1, 3), base.vertex(4, 3));
  std::array<int, 4> quad1 = {base.vertex(1, 3), base.vertex(2, 3), base.vertex(3, 3),
                              base.vertex(4, 3)};
  std::array<int, 4> quad2 = {base.vertex(4, 3), base.vertex(5, 3), base.vertex(6, 3),
                              base.vertex(1, 3)};
  for (std::array<int, 4> quad : {quad1, quad2}) {
    for (int level = 0; level < 9; ++level) {
      std::array<int, 4> ring{};
      rot = insert_ring_in_quad(rot, quad, &ring);
      quad = ring;
    }
  }
  return build_embedding(rot);
}

}  // namespace

TEST_CASE("bfs layers basics") {
  CylGrid g = make_grid(5, 4);
  BfsLayers layers = cuff_layers(g);
  for (int v = 0; v < g.emb.vertex_count(); ++v) {
    bool in_source = std::find(layers.source.begin(), layers.source.end(), v) !=
                     layers.source.end();
    CHECK((layers.dist[v] == 0) == in_source);
    for (int w : g.emb.adjacency()[v]) CHECK(std::abs(layers.dist[v] - layers.dist[w]) <= 1);
  }
}

TEST_CASE("classify_face on a layered grid") {
  CylGrid g = make_grid(4, 4);
  BfsLayers layers = cuff_layers(g);
  int tight = 0, equi = 0;
  for (size_t f = 0; f < g.emb.faces().size(); ++f) {
    TightnessReport rep = classify_face(g.emb, layers, static_cast<int>(f));
    if (rep.cls == FaceClass::s_tight) {
      ++tight;
      CHECK(rep.t >= 0);
      // the distance multiset is {t, t, t+1, t+1} with the near pair adjacent
      std::multiset<int> ds(rep.witness_dist.begin(), rep.witness_dist.end());
      CHECK(ds == std::multiset<int>{rep.t, rep.t, rep.t + 1, rep.t + 1});
    }
    if (rep.cls == FaceClass::equidistant) ++equi;
  }
  CHECK(tight == 12);  // three interior annuli of four quads
  CHECK(equi == 2);    // the two caps
}

TEST_CASE("triangle face at mixed distances is neither tight nor equidistant") {
  std::vector<std::vector<int>> tri = {{2, 1}, {0, 2}, {1, 0}};
  PlanarEmbedding e = build_embedding(tri);
  std::vector<int> src{0};
  BfsLayers layers = bfs_layers(e, src);
  TightnessReport rep = classify_face(e, layers, 0);
  CHECK(rep.cls == FaceClass::other);
}

TEST_CASE("all-equal quad classifies as equidistant, not S-tight") {
  CylGrid g = make_grid(4, 1);
  std::vector<int> all{0, 1, 2, 3};
  BfsLayers layers = bfs_layers(g.emb, all);
  for (int f = 0; f < 2; ++f) {
    TightnessReport rep = classify_face(g.emb, layers, f);
    CHECK(rep.cls == FaceClass::equidistant);
    CHECK(rep.t == 0);
  }
}

TEST_CASE("equidistant cycle discovery") {
  CylGrid g = make_grid(5, 6);
  BfsLayers layers = cuff_layers(g);
  auto c = find_equidistant_cycle(g.emb, layers, 3);
  REQUIRE(c.has_value());
  std::vector<int> got = c->vertices, want = g.hoop(4);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  // a path host has acyclic layers
  PlanarEmbedding path = build_embedding({{1}, {0, 2}, {1, 3}, {2}});
  std::vector<int> src{0};
  BfsLayers pl = bfs_layers(path, src);
  CHECK_FALSE(find_equidistant_cycle(path, pl, 2).has_value());
}

TEST_CASE("contaminated angles and the quiet window") {
  // grid with length-4 caps has no contaminated angle at all
  CylGrid g = make_grid(4, 12);
  BfsLayers layers = cuff_layers(g);
  auto angles = contaminated_angles(g.emb, layers, 11, std::nullopt);
  CHECK(angles.empty());
  CHECK(find_quiet_window(angles, layers, 11, 3) == 2);

  // a pentagonal cap contaminates the integers near it
  CylGrid g5 = make_grid(5, 12);
  BfsLayers layers5 = cuff_layers(g5);
  auto angles5 = contaminated_angles(g5.emb, layers5, 12, std::nullopt);
  CHECK_FALSE(angles5.empty());
  for (const Angle& a : angles5) {
    const FaceWalk& f = g5.emb.faces()[a.face];
    CHECK(f.length() >= 5);
    CHECK(layers5.dist[a.vertex] <= 11);
  }
  // contaminated integers are exactly 0 and 11 (the two pentagon caps)
  auto quiet = find_quiet_window(angles5, layers5, 12, 3);
  REQUIRE(quiet.has_value());
  CHECK(*quiet == 2);
  CHECK_FALSE(find_quiet_window(angles5, layers5, 12, 9).has_value());
}

TEST_CASE("equidistant length audit on layered hosts") {
  CylGrid g = make_grid(5, 5);
  BfsLayers layers = cuff_layers(g);
  auto stats = equidistant_length_audit(g.emb, layers, 5);
  REQUIRE(stats.size() == 4);
  for (const auto& st : stats) {
    CHECK(st.vertex_count == 5);
    REQUIRE(st.girth.has_value());
    CHECK(*st.girth == 5);
    REQUIRE(st.max_cycle_len.has_value());
    CHECK(*st.max_cycle_len == 5);  // each layer is a single 5-cycle
  }

  PlanarEmbedding path = build_embedding({{1}, {0, 2}, {1, 3}, {2}});
  std::vector<int> src{0};
  BfsLayers pl = bfs_layers(path, src);
  auto pstats = equidistant_length_audit(path, pl, 4);
  for (const auto& st : pstats) CHECK_FALSE(st.girth.has_value());
}

TEST_CASE("grower restarts on a chorded layer and still succeeds") {
  PlanarEmbedding host = restart_host();
  std::vector<int> src;
  for (int i = 0; i < 6; ++i) src.push_back(i);  // the innermost ring
  BfsLayers layers = bfs_layers(host, src);
  std::vector<int> mring;
  for (int i = 6; i < 12; ++i) mring.push_back(i);
  std::vector<std::string> trace;
  GrowResult res = grow_cylindrical_grid(host, layers, CycleRef(mring), 9, &trace);
  REQUIRE(std::holds_alternative<GrownGrid>(res));
  const GrownGrid& grid = std::get<GrownGrid>(res);
  CHECK(grid.restarts == 1);
  CHECK(grid.r == 4);
  CHECK(grid.hoops.size() == 9);
  CHECK(grid.start_distance == 2);
  for (size_t j = 0; j < grid.hoops.size(); ++j) {
    auto eq = is_equidistant(layers, CycleRef(grid.hoops[j]));
    REQUIRE(eq.has_value());
    CHECK(*eq == 2 + static_cast<int>(j));
  }
  // restart trace records a strict length decrease
  bool found = false;
  for (const std::string& line : trace)
    if (line.find("restart 1") != std::string::npos &&
        line.find("6 -> 4") != std::string::npos)
      found = true;
  CHECK(found);

  // the audit sees the chorded layer: girth 4, longest cycle 6
  auto stats = equidistant_length_audit(host, layers, 4);
  REQUIRE(stats.size() >= 2);
  CHECK(stats[1].distance == 2);
  CHECK(stats[1].girth == 4);
  CHECK(stats[1].max_cycle_len == 6);
}

TEST_CASE("distance criterion rejects malformed input") {
  // two triangles joined by a long path, plus a 4-cycle in the middle
  SimpleGraph g(8);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(6, 4);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  std::vector<std::vector<int>> family{{0, 1, 2}, {4, 5, 6}};
  CHECK(test::code_of([&] {
          check_distcrit(g, family, CycleRef({0, 1, 2}), 0, 2);
        }) == Errc::not_length4);
  // the triangles are at distance 2 < 2d
  SimpleGraph h = g;
  h.adj.resize(12);
  h.n = 12;
  h.add_edge(3, 8);
  h.add_edge(8, 9);
  h.add_edge(9, 10);
  h.add_edge(10, 11);
  h.add_edge(11, 3);
  CHECK(test::code_of([&] {
          check_distcrit(h, family, CycleRef({8, 9, 10, 11}), 0, 3);
        }) == Errc::family_too_close);
}

TEST_CASE("distance criterion is silent when no identification triggers") {
  // a 4-cycle hanging far from two far-apart triangles
  SimpleGraph g(15);
  auto path = [&](std::initializer_list<int> vs) {
    int prev = -1;
    for (int v : vs) {
      if (prev >= 0) g.add_edge(prev, v);
      prev = v;
    }
  };
  g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(2, 0);
  g.add_edge(3, 4); g.add_edge(4, 5); g.add_edge(5, 3);
  path({0, 6, 7, 8, 9, 3});                     // triangles at distance 5
  g.add_edge(7, 10); path({10, 11, 12, 13});
  g.add_edge(13, 10);  // 4-cycle 10,11,12,13 dangling off the path
  DistCritResult res =
      check_distcrit(g, {{0, 1, 2}, {3, 4, 5}}, CycleRef({10, 11, 12, 13}), 0, 2);
  CHECK(res.verdict == DistCritResult::Verdict::hypothesis_not_met);
}

TEST_CASE("window formula") {
  CHECK(lemma_window(1) == 9);
  CHECK(lemma_window(4) == 29);   // 8 + 14 + 7
  CHECK(lemma_window(8) == 44);   // 16 + 21 + 7
  CHECK(test::code_of([] { lemma_window(0); }) == Errc::invalid_argument);
}
