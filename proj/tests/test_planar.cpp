#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "plancol/io.hpp"
#include "plancol/planar.hpp"
#include "test_common.hpp"

using namespace plancol;

namespace {

// cube drawn as two concentric squares
const std::vector<std::vector<int>> kCube = {
    {4, 3, 1}, {5, 0, 2}, {6, 1, 3}, {7, 2, 0},
    {7, 0, 5}, {4, 1, 6}, {5, 2, 7}, {6, 3, 4},
};

std::vector<std::vector<int>> cycle_table(int k) {
  std::vector<std::vector<int>> rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + k - 1) % k, (i + 1) % k};
  return rot;
}

std::vector<std::vector<int>> grid_table(int r, int s) {
  // concentric circles, same recipe the library uses for cylindrical grids
  std::vector<std::vector<int>> rot(static_cast<size_t>(r) * s);
  auto id = [r](int i, int j) { return j * r + i; };
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < r; ++i) {
      auto& row = rot[id(i, j)];
      if (j + 1 < s) row.push_back(id(i, j + 1));
      row.push_back(id((i + r - 1) % r, j));
      if (j > 0) row.push_back(id(i, j - 1));
      row.push_back(id((i + 1) % r, j));
    }
  return rot;
}

// all-pairs shortest paths by Floyd-Warshall, the independent distance oracle
std::vector<std::vector<int>> apsp(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) d[v][w] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace

TEST_CASE("cube embedding: six quadrilateral faces") {
  PlanarEmbedding e = build_embedding(kCube);
  REQUIRE(e.vertex_count() == 8);
  REQUIRE(e.edge_count() == 12);
  const auto& faces = trace_faces(e);
  CHECK(faces.size() == 6);
  for (const FaceWalk& f : faces) CHECK(f.length() == 4);
  CHECK(8 - 12 + static_cast<int>(faces.size()) == 2);
}

TEST_CASE("single triangle bounds two faces") {
  PlanarEmbedding e = build_embedding(cycle_table(3));
  const auto& faces = trace_faces(e);
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].length() == 3);
  CHECK(faces[1].length() == 3);
}

TEST_CASE("malformed rotation tables are rejected") {
  using test::code_of;
  CHECK(code_of([] { build_embedding({{1}, {}}); }) == Errc::asymmetric_adjacency);
  CHECK(code_of([] { build_embedding({{1, 1}, {0, 0}}); }) == Errc::duplicate_neighbor);
  CHECK(code_of([] { build_embedding({{0}}); }) == Errc::self_loop);
  CHECK(code_of([] { build_embedding({{1, 9}, {0}}); }) == Errc::invalid_argument);
}

TEST_CASE("nonplanar rotation systems fail the sphere check") {
  // K5 has no genus-0 rotation system
  std::vector<std::vector<int>> k5(5);
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v)
      if (v != u) k5[u].push_back(v);
  CHECK(test::code_of([&] { build_embedding(k5); }) == Errc::non_spherical);
}

TEST_CASE("disconnected embeddings are accepted but faces refuse") {
  PlanarEmbedding e = build_embedding({{1}, {0}, {3}, {2}});
  CHECK_FALSE(e.connected());
  CHECK(test::code_of([&] { trace_faces(e); }) == Errc::disconnected_graph);
}

TEST_CASE("grid face censuses") {
  PlanarEmbedding g43 = build_embedding(grid_table(4, 3));
  const auto& f43 = trace_faces(g43);
  CHECK(f43.size() == 10);
  long sum = 0;
  int quads = 0;
  for (const auto& f : f43) {
    sum += f.length();
    quads += (f.length() == 4);
  }
  CHECK(quads == 10);  // eight interior quads plus the two length-4 cuff faces
  CHECK(sum == 2 * g43.edge_count());
  CHECK(12 - 20 + 10 == 2);

  PlanarEmbedding g32 = build_embedding(grid_table(3, 2));
  const auto& f32 = trace_faces(g32);
  CHECK(f32.size() == 5);
  int tris = 0;
  for (const auto& f : f32) tris += (f.length() == 3);
  CHECK(tris == 2);
  CHECK(6 - 9 + 5 == 2);
}

TEST_CASE("a bridge is walked twice by its face") {
  PlanarEmbedding e = build_embedding({{1}, {0}});
  const auto& faces = trace_faces(e);
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].length() == 2);
}

TEST_CASE("set_distance basics and oracle check") {
  PlanarEmbedding path5 = build_embedding({{1}, {0, 2}, {1, 3}, {2, 4}, {3}});
  std::vector<int> a{0}, b{4}, same{2};
  CHECK(set_distance(path5, same, same) == 0);
  CHECK(set_distance(path5, a, b) == 4);
  CHECK(test::code_of([&] { set_distance(path5, {}, b); }) == Errc::empty_set);

  // two triangles joined by a path of length 6 at designated corners
  std::vector<std::vector<int>> rot(11);
  auto link = [&](int u, int v) {
    rot[u].push_back(v);
    rot[v].push_back(u);
  };
  link(0, 1); link(1, 2); link(2, 0);        // first triangle
  link(3, 4); link(4, 5); link(5, 3);        // second triangle
  link(0, 6); link(6, 7); link(7, 8); link(8, 9); link(9, 10); link(10, 3);
  PlanarEmbedding e = build_embedding(rot);
  std::vector<int> x{0, 1, 2}, y{3, 4, 5};
  CHECK(set_distance(e, x, y) == 6);
  auto d = apsp(e.adjacency());
  int best = 1 << 20;
  for (int u : x)
    for (int v : y) best = std::min(best, d[u][v]);
  CHECK(best == 6);

  // symmetry and triangle inequality over singletons
  for (int u = 0; u < e.vertex_count(); ++u)
    for (int v = 0; v < e.vertex_count(); ++v) {
      std::vector<int> su{u}, sv{v};
      CHECK(set_distance(e, su, sv) == set_distance(e, sv, su));
      for (int w = 0; w < e.vertex_count(); ++w) {
        std::vector<int> sw{w};
        CHECK(set_distance(e, su, sv) <=
              set_distance(e, su, sw) + set_distance(e, sw, sv));
      }
    }
}

TEST_CASE("triangles and their pairwise distance") {
  PlanarEmbedding grid = build_embedding(grid_table(4, 3));
  CHECK(find_triangles(grid).empty());
  CHECK(min_triangle_pair_distance(grid) == kUnreachable);

  // two disjoint triangles joined by a 5-path
  std::vector<std::vector<int>> rot(10);
  auto link = [&](int u, int v) {
    rot[u].push_back(v);
    rot[v].push_back(u);
  };
  link(0, 1); link(1, 2); link(2, 0);
  link(3, 4); link(4, 5); link(5, 3);
  link(0, 6); link(6, 7); link(7, 8); link(8, 9); link(9, 3);
  PlanarEmbedding e = build_embedding(rot);
  CHECK(find_triangles(e).size() == 2);
  CHECK(min_triangle_pair_distance(e) == 5);

  std::vector<std::vector<int>> k4 = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  PlanarEmbedding ek4 = build_embedding(k4);
  CHECK(find_triangles(ek4).size() == 4);
  CHECK(min_triangle_pair_distance(ek4) == 0);
}

TEST_CASE("separating cycles") {
  PlanarEmbedding grid = build_embedding(grid_table(4, 3));
  // a facial quad has an empty side
  CycleRef quad({0, 1, 5, 4});
  CHECK_FALSE(is_separating_cycle(grid, quad));
  // the middle hoop separates the two cuffs
  CycleRef hoop({4, 5, 6, 7});
  CHECK(is_separating_cycle(grid, hoop));
  CHECK(test::code_of([&] { is_separating_cycle(grid, CycleRef({0, 1, 2})); }) ==
        Errc::not_a_cycle);
}

TEST_CASE("octahedron equator separates") {
  std::vector<std::vector<int>> oct = {
      {1, 2, 3, 4}, {0, 2, 5, 4}, {0, 3, 5, 1}, {0, 4, 5, 2}, {0, 1, 5, 3}, {4, 3, 2, 1},
  };
  PlanarEmbedding e = build_embedding(oct);
  const auto& faces = trace_faces(e);
  CHECK(faces.size() == 8);
  for (const auto& f : faces) CHECK(f.length() == 3);
  CHECK(is_separating_cycle(e, CycleRef({1, 2, 3, 4})));
}

TEST_CASE("identify_vertices") {
  PlanarEmbedding p2 = build_embedding({{1}, {0, 2}, {1}});
  SimpleGraph g = identify_vertices(p2, 0, 2);
  CHECK(g.n == 2);
  CHECK(g.edge_count() == 1);

  PlanarEmbedding c4 = build_embedding(cycle_table(4));
  std::vector<int> relabel;
  SimpleGraph h = identify_vertices(c4, 0, 2, &relabel);
  CHECK(h.n == 3);
  CHECK(h.edge_count() == 2);
  CHECK(relabel[0] == relabel[2]);

  PlanarEmbedding c6 = build_embedding(cycle_table(6));
  SimpleGraph b = identify_vertices(c6, 0, 3);
  CHECK(b.n == 5);
  CHECK(b.edge_count() == 6);
  std::vector<int> degs;
  for (const auto& a : b.adj) degs.push_back(static_cast<int>(a.size()));
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{2, 2, 2, 2, 4});  // two triangles at one vertex

  CHECK(test::code_of([&] { identify_vertices(c4, 0, 1); }) == Errc::adjacent_pair);
}

TEST_CASE("induced cycles") {
  PlanarEmbedding c5 = build_embedding(cycle_table(5));
  CHECK(is_induced_cycle(c5, CycleRef({0, 1, 2, 3, 4})));

  // square with one diagonal
  std::vector<std::vector<int>> diam = {{1, 2, 3}, {2, 0}, {1, 3, 0}, {0, 2}};
  PlanarEmbedding e = build_embedding(diam);
  CHECK_FALSE(is_induced_cycle(e, CycleRef({0, 1, 2, 3})));

  PlanarEmbedding grid = build_embedding(grid_table(5, 3));
  CHECK(is_induced_cycle(grid, CycleRef({5, 6, 7, 8, 9})));
}

TEST_CASE("rot format round trip") {
  PlanarEmbedding e = build_embedding(kCube);
  std::string text = planar_rot_string(e);
  std::istringstream in(text);
  PlanarEmbedding back = read_planar_rot(in);
  CHECK(planar_rot_string(back) == text);
  CHECK(back.rotations() == e.rotations());
}
