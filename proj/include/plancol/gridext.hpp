#pragma once

#include <optional>
#include <vector>

#include "plancol/coloring.hpp"
#include "plancol/planar.hpp"
#include "plancol/winding.hpp"

namespace plancol {

// The r x s cylindrical grid: Cartesian product of a cycle of length r and a
// path on s vertices.  Its r-cycles D_1..D_s are the hoops; D_1 and D_s are
// the cuffs.  Vertices are indexed (i, j) with i in 1..r along the hoop and
// j in 1..s across; id = (j-1)*r + (i-1).  The embedding draws the hoops as
// concentric circles with D_1 innermost; each cuff bounds one cap face, and
// winding numbers of cuff colorings are always measured along the cap's
// boundary walk: D_1 in increasing-i order, D_s in decreasing-i order.
struct CylGrid {
  int r = 0, s = 0;
  PlanarEmbedding emb;

  int vertex(int i, int j) const { return (j - 1) * r + (i - 1); }
  std::vector<int> hoop(int j) const;  // ids in increasing-i order
  CycleRef hoop_cycle(int j) const { return CycleRef(hoop(j)); }

  int cap_face(int which) const;  // which = 1 or 2
  OrientedFacialCycle cuff_cycle(int which) const;
};

// Throws Errc::bad_dimensions unless r >= 3 and s >= 1.
CylGrid make_grid(int r, int s);

// Winding of the cuff colors under the grid's cap orientation.
int cuff_winding(const CylGrid& g, const ThreeColoring& phi, int which);

// Ordered partition of a hoop into segments.  A segment is the vertex set of
// an even-length subpath whose end vertices share a color a (the flag) and
// whose interior uses only a and a+1; segment cardinality is therefore odd.
// Blocks are contiguous position arcs [starts[b], starts[b+1]) cyclically;
// starts is strictly increasing in [0, r).
struct Segmentation {
  int length = 0;
  std::vector<int> starts;

  int block_count() const { return static_cast<int>(starts.size()); }
  int block_len(int b) const;
  bool contains(int b, int pos) const;
};

// Throws Errc::invalid_argument when the blocks are not all valid segments
// of the given row coloring.
void validate_segmentation(const std::vector<Color>& row, const Segmentation& seg);

// Deterministic segmentation of a properly colored hoop: one left-to-right
// pass from position 0 merging each singleton triple (a, a+1, a) into one
// block, singletons elsewhere.  Always succeeds on proper input.
Segmentation segmentation_of(const std::vector<Color>& hoop_colors);

struct PushResult {
  std::vector<Color> row;  // coloring of the next hoop
  Segmentation seg;
  bool merged = false;
};

// One step of the hoop-advance machinery.  When the segmentation has k >= 4
// blocks and three consecutive blocks with equal outer flags exist
// (lexicographically first chosen), the step recolors so their image merges
// into a single segment, dropping the block count by two; otherwise it is
// the plain +1 rotation of every color.  Both middle-flag cases (flag a+1
// and flag a+2) are implemented.  w_target is the winding bookkeeping value
// of the current hoop: k >= 4 with |w_target| <= 1 guarantees a merge triple
// exists, so its absence throws Errc::no_merge_available.
PushResult push_hoop(const std::vector<Color>& row, const Segmentation& seg, int w_target);

// Per-hoop trace entry emitted by the extension drivers.
struct HoopTrace {
  int hoop = 0;  // grid hoop index 1..s
  std::vector<int> block_lens;
  std::vector<Color> flags;
  int winding = 0;  // of the hoop colors in increasing-i order
  bool merged = false;
};

// Extends a coloring of cuff C1 with |winding| <= 1 across a grid of height
// s = ceil((r+3)/2) so that the far cuff minus the vertex at position v0_pos
// (1-based hoop position) uses only two colors.  The result agrees with phi
// on C1 exactly.  Throws Errc::bad_dimensions for other heights,
// Errc::winding_too_large when |w| > 1, Errc::partial_coloring /
// Errc::improper_coloring / Errc::invalid_argument on malformed phi.
ThreeColoring extend_one_cuff(const CylGrid& g, const ThreeColoring& phi, int v0_pos,
                              std::vector<HoopTrace>* trace = nullptr);

// Extends a coloring of both cuffs of an r x (r+5) grid, given
// |w(C1)| <= 1 and w(C1) + w(C2) = 0 under the cap orientations.  The two
// cuff restrictions of the result equal phi exactly.  Throws
// Errc::winding_mismatch when the windings do not cancel.
ThreeColoring extend_two_cuffs(const CylGrid& g, const ThreeColoring& phi,
                               std::vector<HoopTrace>* trace = nullptr);

}  // namespace plancol
