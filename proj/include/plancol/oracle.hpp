#pragma once

#include <optional>
#include <random>
#include <utility>

#include "plancol/coloring.hpp"
#include "plancol/graph.hpp"
#include "plancol/planar.hpp"

namespace plancol {

// Precoloring-extension instance: a graph plus a fixed partial coloring
// (typically on a facial cycle).  The fixed part must be proper.
struct PrecoloringInstance {
  SimpleGraph graph;
  ThreeColoring fixed;
};

// Exact solver: backtracking over {1,2,3} with forced-move propagation,
// deterministic branch order (lowest id, lowest color).  Returns a proper
// total extension of the fixed part, or nullopt after exhausting the search
// space (a certified non-extension).
std::optional<ThreeColoring> solve_3coloring(const PrecoloringInstance& inst);

// True iff phi0 (proper on c0) does not extend to g but extends to every
// single-edge-deleted and single-vertex-deleted subgraph that keeps c0.
bool is_critical(const SimpleGraph& g, const std::optional<CycleRef>& c0,
                 const ThreeColoring& phi0);

// Sum of |f| over the faces of length at least five together with the face
// bounded by c0 (counted once), paired with the number of triangles.
std::pair<long, int> mainlemma_statistic(const PlanarEmbedding& e,
                                         const std::optional<CycleRef>& c0);

// A uniform-ish random proper coloring through randomized backtracking;
// deterministic for a fixed generator state.  Requires a colorable graph.
ThreeColoring random_proper_coloring(const std::vector<std::vector<int>>& adj,
                                     std::mt19937_64& rng);

}  // namespace plancol
