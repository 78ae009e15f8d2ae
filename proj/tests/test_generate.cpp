#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "plancol/generate.hpp"
#include "plancol/graph.hpp"
#include "test_common.hpp"

using namespace plancol;

namespace {

std::vector<int> degree_sequence(const RotationTable& rot) {
  std::vector<int> d;
  for (const auto& r : rot) d.push_back(static_cast<int>(r.size()));
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::vector<int>> sorted_adj(const RotationTable& rot) {
  std::vector<std::vector<int>> adj = rot;
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

TEST_CASE("triangle-free classes on four vertices") {
  // hand enumeration: the path, the star, and the 4-cycle
  auto out = gen_planar(4, GenConstraint::triangle_free);
  CHECK(out.size() == 3);
  std::set<std::vector<int>> degs;
  for (const auto& e : out) degs.insert(degree_sequence(e.rotations()));
  CHECK(degs.count({1, 1, 2, 2}) == 1);
  CHECK(degs.count({1, 1, 1, 3}) == 1);
  CHECK(degs.count({2, 2, 2, 2}) == 1);
}

TEST_CASE("all plane classes on four vertices") {
  // two trees, triangle-with-pendant, 4-cycle, diamond, K4
  auto out = gen_planar(4, GenConstraint::none);
  CHECK(out.size() == 6);
}

TEST_CASE("constraints hold on every emitted class") {
  GenSpec one_tri{7, GenConstraint::max_one_triangle, 0};
  for_each_plane_graph(one_tri, [&](const RotationTable& rot) {
    CHECK(find_triangles(sorted_adj(rot)).size() <= 1);
  });
  GenSpec spaced{7, GenConstraint::min_triangle_distance, 2};
  for_each_plane_graph(spaced, [&](const RotationTable& rot) {
    int d = min_triangle_pair_distance(sorted_adj(rot));
    CHECK((d == kUnreachable || d >= 2));
  });
}

TEST_CASE("embedding code is invariant under relabeling and reflection") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    RotationTable rot = gen_planar_random(7, GenConstraint::none, 0, 0.5, rng);
    const int n = static_cast<int>(rot.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    RotationTable relabeled(n);
    for (int v = 0; v < n; ++v) {
      for (int w : rot[v]) relabeled[perm[v]].push_back(perm[w]);
    }
    CHECK(embedding_code(rot) == embedding_code(relabeled));
    RotationTable mirrored = rot;
    for (auto& r : mirrored) std::reverse(r.begin(), r.end());
    CHECK(embedding_code(rot) == embedding_code(mirrored));
  }
}

TEST_CASE("distinct embeddings of one graph get distinct codes") {
  // two embeddings of the same tree: a spider with legs in different cyclic
  // interleavings is still one class, but a path vs star differ
  RotationTable path = {{1}, {0, 2}, {1, 3}, {2}};
  RotationTable star = {{1, 2, 3}, {0}, {0}, {0}};
  CHECK(embedding_code(path) != embedding_code(star));
}

TEST_CASE("random generation respects constraints and is seeded") {
  std::mt19937_64 a(5), b(5);
  RotationTable x = gen_planar_random(12, GenConstraint::triangle_free, 0, 0.6, a);
  RotationTable y = gen_planar_random(12, GenConstraint::triangle_free, 0, 0.6, b);
  CHECK(x == y);
  CHECK(x.size() == 12);
  CHECK(find_triangles(sorted_adj(x)).empty());
  build_embedding(x);  // genus-0 by construction

  std::mt19937_64 c(6);
  RotationTable z = gen_planar_random(10, GenConstraint::min_triangle_distance, 3, 0.7, c);
  int d = min_triangle_pair_distance(sorted_adj(z));
  CHECK((d == kUnreachable || d >= 3));
}

TEST_CASE("generator rejects sizes below three") {
  CHECK(test::code_of([] { gen_planar(2, GenConstraint::none); }) ==
        Errc::infeasible_constraint);
}

TEST_CASE("surgery helpers keep embeddings spherical") {
  RotationTable c6(6);
  for (int i = 0; i < 6; ++i) c6[i] = {(i + 5) % 6, (i + 1) % 6};
  RotationTable chorded = add_chord(c6, 0, 3);
  PlanarEmbedding e = build_embedding(chorded);
  CHECK(e.edge_count() == 7);
  CHECK(e.faces().size() == 3);

  RotationTable split = subdivide_edge(c6, 0, 1);
  PlanarEmbedding es = build_embedding(split);
  CHECK(es.vertex_count() == 7);
  CHECK(es.faces().size() == 2);

  RotationTable c4(4);
  for (int i = 0; i < 4; ++i) c4[i] = {(i + 3) % 4, (i + 1) % 4};
  std::array<int, 4> ring{};
  RotationTable nested = insert_ring_in_quad(c4, {0, 1, 2, 3}, &ring);
  PlanarEmbedding en = build_embedding(nested);
  CHECK(en.vertex_count() == 8);
  CHECK(en.edge_count() == 12);
  CHECK(en.faces().size() == 6);  // a cube drawn as nested squares
}
