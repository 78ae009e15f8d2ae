#include "plancol/winding.hpp"

#include "plancol/errors.hpp"

namespace plancol {

OrientedFacialCycle oriented_cycle_of_face(const PlanarEmbedding& e, int face_id) {
  const auto& faces = e.faces();
  if (face_id < 0 || face_id >= static_cast<int>(faces.size()))
    fail(Errc::invalid_argument, "face id out of range");
  const FaceWalk& walk = faces[face_id];
  if (!walk.is_simple_cycle()) fail(Errc::non_cycle_face, "face boundary is not a cycle");
  return OrientedFacialCycle{walk.vertices(), face_id};
}

int winding_of_sequence(std::span<const int> cycle, const ThreeColoring& phi) {
  const int k = static_cast<int>(cycle.size());
  int w = 0;
  for (int i = 0; i < k; ++i) {
    Color a = phi.color[cycle[i]];
    Color b = phi.color[cycle[(i + 1) % k]];
    if (a == 0 || b == 0) fail(Errc::partial_coloring, "cycle vertex uncolored");
    if (a == b) fail(Errc::improper_coloring, "equal colors on consecutive cycle vertices");
    if (a == 1 && b == 2) ++w;
    if (a == 2 && b == 1) --w;
  }
  return w;
}

int winding_number(const OrientedFacialCycle& c, const ThreeColoring& phi) {
  return winding_of_sequence(c.vertices, phi);
}

int winding_of_colors(std::span<const Color> colors) {
  const int k = static_cast<int>(colors.size());
  int w = 0;
  for (int i = 0; i < k; ++i) {
    Color a = colors[i], b = colors[(i + 1) % k];
    if (a == 0 || b == 0) fail(Errc::partial_coloring, "uncolored entry in color sequence");
    if (a == b) fail(Errc::improper_coloring, "equal consecutive colors");
    if (a == 1 && b == 2) ++w;
    if (a == 2 && b == 1) --w;
  }
  return w;
}

int face_winding_sum(const PlanarEmbedding& e, const ThreeColoring& phi) {
  require_proper_total(e.adjacency(), phi);
  int sum = 0;
  for (size_t f = 0; f < e.faces().size(); ++f)
    sum += winding_number(oriented_cycle_of_face(e, static_cast<int>(f)), phi);
  return sum;
}

}  // namespace plancol
