#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plancol/graph.hpp"
#include "plancol/planar.hpp"

namespace plancol {

// BFS layer decomposition from a source vertex set S: dist is 0 exactly on
// S and adjacent vertices differ by at most one.
struct BfsLayers {
  std::vector<int> source;
  std::vector<int> dist;  // kUnreachable where no path from S exists
};

BfsLayers bfs_layers(const std::vector<std::vector<int>>& adj, std::span<const int> sources);
BfsLayers bfs_layers(const PlanarEmbedding& e, std::span<const int> sources);

enum class FaceClass { s_tight, equidistant, other };

// Classification of one face against the layers: S-tight means a 4-cycle
// v1 v2 v3 v4 in boundary order with d(v1) = d(v2) = t and
// d(v3) = d(v4) = t+1; equidistant means all boundary vertices share one
// distance.  witness_dist lists the boundary distances in walk order.
struct TightnessReport {
  int face_id = -1;
  FaceClass cls = FaceClass::other;
  int t = -1;
  std::vector<int> witness_dist;
};

// Throws Errc::non_cycle_face when the face boundary is not a simple cycle.
TightnessReport classify_face(const PlanarEmbedding& e, const BfsLayers& layers, int face_id);

// Vertex-face incidence.
struct Angle {
  int vertex = -1;
  int face = -1;
};

// All S-contaminated angles: the vertex within distance d-1 of S and the
// face of length at least five (or the face bounded by c0, when given).
std::vector<Angle> contaminated_angles(const PlanarEmbedding& e, const BfsLayers& layers, int d,
                                       const std::optional<CycleRef>& c0);

// First i0 >= 2 with i0 + width <= d-1 such that no integer of
// [i0-1, i0+width] is the distance of a contaminated angle's vertex.
std::optional<int> find_quiet_window(std::span<const Angle> angles, const BfsLayers& layers,
                                     int d, int width);

// Distance t when every cycle vertex is at distance exactly t from S.
std::optional<int> is_equidistant(const BfsLayers& layers, const CycleRef& c);

// A shortest cycle of the subgraph induced by the vertices at distance
// exactly i0; nullopt when that subgraph is a forest.
std::optional<CycleRef> find_equidistant_cycle(const PlanarEmbedding& e, const BfsLayers& layers,
                                               int i0);

// Result of the grid grower: hoops[j] lists hoop j+1 in cyclic order with
// columns aligned across hoops; hoop j is equidistant at distance
// start_distance + j.
struct GrownGrid {
  int r = 0;
  std::vector<std::vector<int>> hoops;
  int start_distance = 0;
  int restarts = 0;
};

struct FailureWitness {
  enum class Reason {
    precondition_face,    // a face in the window is not bounded by an S-tight cycle
    window_exhausted,     // growth or a restart stepped past i0 + window
    non_separating,       // a candidate hoop fails to split the sphere around S
    outward_mismatch,     // the two faces at a vertex disagree on its outward neighbor
    degenerate_collision  // a collision subpath too short to form a cycle
  };
  Reason reason;
  int face_id = -1;
  int distance = -1;
  std::string detail;
};

const char* failure_reason_name(FailureWitness::Reason r);

using GrowResult = std::variant<GrownGrid, FailureWitness>;

// Grows an r x (r+5) cylindrical subgrid from an equidistant cycle c0,
// assuming every face at distance within [i0, i0+window] of S is bounded by
// an S-tight cycle (checked up front; violations come back as a
// FailureWitness).  The growth walks outward one hoop at a time through the
// S-tight quads; a hoop acquiring a chord or two columns colliding restarts
// the growth from a strictly shorter equidistant cycle.  Trace lines record
// rows grown and restarts.
GrowResult grow_cylindrical_grid(const PlanarEmbedding& e, const BfsLayers& layers,
                                 const CycleRef& c0, int window,
                                 std::vector<std::string>* trace = nullptr);

// Window length the grower is entitled to assume for a starting cycle of
// length at most s: 2s + 7*log2(s) + 7, rounded up.
int lemma_window(int s);

// Per-layer cycle statistics in the layer-induced subgraphs for layers
// 1..d-1: shortest cycle length always, maximum cycle length by exhaustive
// enumeration when the layer has at most max_exhaustive vertices.
struct LayerCycleStats {
  int distance = 0;
  int vertex_count = 0;
  std::optional<int> girth;
  std::optional<int> max_cycle_len;
};

std::vector<LayerCycleStats> equidistant_length_audit(const PlanarEmbedding& e,
                                                      const BfsLayers& layers, int d,
                                                      int max_exhaustive = 20);

// Diagonal-identification tightness criterion.  family lists vertex sets
// pairwise at distance >= 2d (violations throw Errc::family_too_close); c
// must be a 4-cycle (Errc::not_length4) of g at distance <= d-1 from
// family[s0_index].  When identifying each diagonal pair brings two distinct
// family sets within 2d-1, the cycle must be tight for family[s0_index]:
// the verdict reports the tightness value t, or lemma_violation if the
// distance pattern contradicts it (which must never happen).
struct DistCritResult {
  enum class Verdict { s0_tight, hypothesis_not_met, lemma_violation };
  Verdict verdict;
  int t = -1;
  std::string detail;
};

DistCritResult check_distcrit(const SimpleGraph& g,
                              const std::vector<std::vector<int>>& family, const CycleRef& c,
                              int s0_index, int d);

}  // namespace plancol
