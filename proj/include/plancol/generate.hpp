#pragma once

#include <array>
#include <functional>
#include <random>
#include <vector>

#include "plancol/planar.hpp"

namespace plancol {

enum class GenConstraint {
  none,
  triangle_free,
  max_one_triangle,
  min_triangle_distance,  // pairwise triangle distance >= delta
};

struct GenSpec {
  int n_max = 6;
  GenConstraint constraint = GenConstraint::none;
  int delta = 0;
};

using RotationTable = std::vector<std::vector<int>>;

// Exhaustive enumeration of connected plane embeddings (rotation systems up
// to relabeling and reflection) with 2 <= n <= n_max satisfying the
// constraint, built by edge and pendant augmentation inside faces so
// planarity holds by construction.  Classes are emitted in a deterministic
// order.  Exact isomorph rejection via canonical codes; intended for small
// n (the level sets grow quickly beyond n ~ 10).
void for_each_plane_graph(const GenSpec& spec,
                          const std::function<void(const RotationTable&)>& sink);

// Exactly-n classes as validated embeddings.  Throws
// Errc::infeasible_constraint when n < 3.
std::vector<PlanarEmbedding> gen_planar(int n, GenConstraint constraint, int delta = 0);

// One random connected plane embedding on n vertices: a seeded augmentation
// walk over the same moves, rejecting those that violate the constraint.
// edge_bias in [0,1] steers the walk toward chords (denser graphs).
RotationTable gen_planar_random(int n, GenConstraint constraint, int delta, double edge_bias,
                                std::mt19937_64& rng);

// Canonical code of a rotation table, a complete invariant of the embedding
// class up to relabeling and reflection.
std::string embedding_code(const RotationTable& rot);

// Embedding surgery helpers used to build test hosts.

// Inserts the edge a-b inside a face whose boundary walk visits both
// vertices; throws Errc::invalid_argument when they share no face.
RotationTable add_chord(const RotationTable& rot, int a, int b);

// Splits the edge u-v with a new degree-2 vertex.
RotationTable subdivide_edge(const RotationTable& rot, int u, int v);

// Nests a new 4-cycle inside the quadrilateral face bounded by the given
// four vertices, joined column-wise by four rungs.  When ring is non-null it
// receives the new vertex ids aligned with the quad's walk order.
RotationTable insert_ring_in_quad(const RotationTable& rot, const std::array<int, 4>& quad,
                                  std::array<int, 4>* ring = nullptr);

}  // namespace plancol
