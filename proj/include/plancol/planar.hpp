#pragma once

#include <span>
#include <utility>
#include <vector>

#include "plancol/graph.hpp"

namespace plancol {

// Directed edge u -> v.
using Dart = std::pair<int, int>;

// Closed boundary walk of one face, as the cyclic sequence of darts traced
// by the next-clockwise rule.  length() counts edge traversals, so a bridge
// contributes twice to the walk of the single face around it.
struct FaceWalk {
  std::vector<Dart> darts;

  int length() const { return static_cast<int>(darts.size()); }
  std::vector<int> vertices() const;  // tails of the darts, in walk order
  bool is_simple_cycle() const;       // every vertex visited exactly once, length >= 3
};

// Cycle given by its cyclic vertex sequence.  Stored in a canonical rotation
// starting at the minimum id so equal cycles compare equal; orientation of
// the stored sequence is preserved.
struct CycleRef {
  std::vector<int> vertices;

  CycleRef() = default;
  explicit CycleRef(std::vector<int> vs);

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const CycleRef&) const = default;
};

// Plane (genus-0) graph given by its rotation system: for every vertex the
// clockwise cyclic order of its neighbors on an oriented sphere.  The
// clockwise orientation is fixed once at construction; faces are traced with
// the "next edge clockwise after the reverse edge" rule, so the two walks
// along a cycle that bounds two faces run in opposite directions.
//
// Rotations are stored in a canonical rotation starting at the minimum
// neighbor id.  Embeddings are immutable after construction and safe to
// share across threads.
class PlanarEmbedding {
 public:
  int vertex_count() const { return n_; }
  long edge_count() const { return m_; }
  bool connected() const { return connected_; }
  const std::vector<std::vector<int>>& rotations() const { return rot_; }
  const std::vector<std::vector<int>>& adjacency() const { return rot_; }

  bool has_edge(int u, int v) const;

  // Faces of a connected embedding, traced once at construction.
  // Throws Errc::disconnected_graph for disconnected inputs.
  const std::vector<FaceWalk>& faces() const;

  // Face on the left of the dart (the face whose walk contains it).
  int face_of_dart(int u, int v) const;

  SimpleGraph graph() const;

 private:
  friend PlanarEmbedding build_embedding(const std::vector<std::vector<int>>& rotation_table);

  int n_ = 0;
  long m_ = 0;
  bool connected_ = false;
  std::vector<std::vector<int>> rot_;
  std::vector<FaceWalk> faces_;
  std::vector<std::vector<int>> dart_face_;  // dart_face_[u][k] = face of (u, rot_[u][k])
};

// Validates and builds an embedding from a rotation table.  Checks: ids in
// range, no self-loops (Errc::self_loop), no repeated neighbor
// (Errc::duplicate_neighbor), symmetry of adjacency
// (Errc::asymmetric_adjacency), and that every connected component traces to
// Euler characteristic 2 (Errc::non_spherical) -- rotation systems of higher
// genus are rejected.  Disconnected inputs are accepted; face-dependent
// operations reject them later.
PlanarEmbedding build_embedding(const std::vector<std::vector<int>>& rotation_table);

// Face list of a connected embedding; sum of face lengths is 2|E|.
const std::vector<FaceWalk>& trace_faces(const PlanarEmbedding& e);

int set_distance(const PlanarEmbedding& e, std::span<const int> x, std::span<const int> y);
std::vector<std::array<int, 3>> find_triangles(const PlanarEmbedding& e);
int min_triangle_pair_distance(const PlanarEmbedding& e);

// True iff both open regions of the sphere minus the cycle contain at least
// one vertex.  Uses the face partition: faces connected across non-cycle
// edges fall into exactly two regions.  Throws Errc::not_a_cycle when c is
// not a cycle of e, Errc::disconnected_graph on disconnected embeddings.
bool is_separating_cycle(const PlanarEmbedding& e, const CycleRef& c);

// Per-face region label (0 or 1) for the two regions of the sphere minus
// the cycle; throws Errc::internal if the cycle fails to split the face
// structure into exactly two parts.
std::vector<int> face_regions(const PlanarEmbedding& e, const CycleRef& c);

// True iff the cycle has no chord in e.
bool is_induced_cycle(const PlanarEmbedding& e, const CycleRef& c);

// Identification of two nonadjacent vertices; the embedding is discarded and
// an abstract graph returned (only distances of the result are ever needed).
SimpleGraph identify_vertices(const PlanarEmbedding& e, int u, int v,
                              std::vector<int>* old_to_new = nullptr);

// Checks that c is a cycle of e (distinct vertices, length >= 3, consecutive
// adjacency); throws Errc::not_a_cycle otherwise.
void require_cycle_of(const PlanarEmbedding& e, const CycleRef& c);

}  // namespace plancol
