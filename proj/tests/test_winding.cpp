#include <sstream>

#include "doctest.h"
#include "plancol/io.hpp"
#include "plancol/winding.hpp"
#include "test_common.hpp"

using namespace plancol;

namespace {

std::vector<std::vector<int>> cycle_table(int k) {
  std::vector<std::vector<int>> rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + k - 1) % k, (i + 1) % k};
  return rot;
}

ThreeColoring colors_on_cycle(int k, const std::vector<Color>& cs) {
  ThreeColoring phi(k);
  for (int i = 0; i < k; ++i) phi.color[i] = cs[i];
  return phi;
}

}  // namespace

TEST_CASE("winding numbers of small cycles") {
  CHECK(winding_of_colors(std::vector<Color>{1, 2, 1, 2}) == 0);
  CHECK(winding_of_colors(std::vector<Color>{1, 2, 3}) == 1);
  CHECK(winding_of_colors(std::vector<Color>{1, 2, 3, 1, 2, 3}) == 2);
}

TEST_CASE("winding requires a proper total coloring") {
  PlanarEmbedding c3 = build_embedding(cycle_table(3));
  OrientedFacialCycle f = oriented_cycle_of_face(c3, 0);
  CHECK(test::code_of([&] { winding_number(f, colors_on_cycle(3, {1, 1, 2})); }) ==
        Errc::improper_coloring);
  ThreeColoring partial(3);
  partial.color[0] = 1;
  CHECK(test::code_of([&] { winding_number(f, partial); }) == Errc::partial_coloring);
}

TEST_CASE("the two faces of one cycle wind oppositely") {
  for (int k = 3; k <= 7; ++k) {
    PlanarEmbedding e = build_embedding(cycle_table(k));
    REQUIRE(e.faces().size() == 2);
    for_each_proper_cycle_coloring(k, [&](const std::vector<Color>& cs) {
      ThreeColoring phi = colors_on_cycle(k, cs);
      int w0 = winding_number(oriented_cycle_of_face(e, 0), phi);
      int w1 = winding_number(oriented_cycle_of_face(e, 1), phi);
      CHECK(w0 + w1 == 0);
      CHECK(face_winding_sum(e, phi) == 0);
    });
  }
}

TEST_CASE("octahedron: winding sum vanishes for every proper coloring") {
  std::vector<std::vector<int>> oct = {
      {1, 2, 3, 4}, {0, 2, 5, 4}, {0, 3, 5, 1}, {0, 4, 5, 2}, {0, 1, 5, 3}, {4, 3, 2, 1},
  };
  PlanarEmbedding e = build_embedding(oct);
  int proper = 0;
  for (int code = 0; code < 729; ++code) {
    ThreeColoring phi(6);
    int x = code;
    for (int v = 0; v < 6; ++v, x /= 3) phi.color[v] = x % 3 + 1;
    if (!is_proper(e.adjacency(), phi)) continue;
    ++proper;
    CHECK(face_winding_sum(e, phi) == 0);
  }
  CHECK(proper == 6);  // one color per antipodal pair
}

TEST_CASE("face_winding_sum refuses non-cycle faces") {
  PlanarEmbedding tree = build_embedding({{1}, {0, 2}, {1}});
  ThreeColoring phi(3);
  phi.color = {1, 2, 1};
  CHECK(test::code_of([&] { face_winding_sum(tree, phi); }) == Errc::non_cycle_face);
}

TEST_CASE("recolor_permuted") {
  ThreeColoring tri(3);
  tri.color = {1, 2, 3};
  ThreeColoring same = recolor_permuted(tri, {0, 1, 2, 3});
  CHECK(same.color == tri.color);
  ThreeColoring swapped = recolor_permuted(tri, {0, 2, 1, 3});
  CHECK(swapped.color == std::vector<Color>{2, 1, 3});
  ThreeColoring c4(4);
  c4.color = {1, 2, 1, 2};
  ThreeColoring cycled = recolor_permuted(c4, {0, 2, 3, 1});
  CHECK(cycled.color == std::vector<Color>{2, 3, 2, 3});
  CHECK(test::code_of([&] { recolor_permuted(tri, {0, 1, 1, 3}); }) == Errc::invalid_argument);
}

TEST_CASE("coloring format round trip") {
  ThreeColoring phi(5);
  phi.color = {1, 0, 3, 2, 0};
  std::string text = coloring_string(phi);
  std::istringstream in(text);
  ThreeColoring back = read_coloring(in, 5);
  CHECK(back.color == phi.color);
  CHECK(coloring_string(back) == text);
}
