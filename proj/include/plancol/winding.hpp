#pragma once

#include <span>

#include "plancol/coloring.hpp"
#include "plancol/planar.hpp"

namespace plancol {

// Facial cycle carrying the orientation induced by the face it bounds: the
// vertex sequence is the boundary in traced walk order.  The face tag is
// mandatory; a free-floating cycle bounds two faces whose induced
// orientations are opposite, and the two winding numbers cancel.
struct OrientedFacialCycle {
  std::vector<int> vertices;
  int face_id = -1;
};

// Builds the oriented cycle of a face; throws Errc::non_cycle_face when the
// boundary walk is not a simple cycle.
OrientedFacialCycle oriented_cycle_of_face(const PlanarEmbedding& e, int face_id);

// Winding number of a proper total coloring along a cyclic vertex sequence:
// the number of 1->2 color steps minus the number of 2->1 steps, with the
// sequence closing back to its first vertex.  Throws
// Errc::partial_coloring / Errc::improper_coloring when the coloring is not
// total and proper along the sequence.
int winding_of_sequence(std::span<const int> cycle, const ThreeColoring& phi);

int winding_number(const OrientedFacialCycle& c, const ThreeColoring& phi);

// Winding of a cyclic color sequence itself (the 1->2 steps minus the 2->1
// steps around the sequence).
int winding_of_colors(std::span<const Color> colors);

// Sum of winding numbers over all face boundaries; zero for every proper
// total coloring of an embedding whose faces are all bounded by cycles.
// Throws Errc::non_cycle_face when some face boundary is not a cycle.
int face_winding_sum(const PlanarEmbedding& e, const ThreeColoring& phi);

}  // namespace plancol
