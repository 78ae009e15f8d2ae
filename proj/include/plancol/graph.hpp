#pragma once

#include <limits>
#include <span>
#include <vector>

namespace plancol {

// Sentinel for "no path" in distance queries.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Abstract simple graph on dense vertex ids 0..n-1, adjacency lists kept
// sorted.  Used where no embedding is required (identified graphs, the
// coloring solver, distance criteria).
struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  explicit SimpleGraph(int n_ = 0) : n(n_), adj(n_) {}

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // inserts sorted, ignores duplicates
  long edge_count() const;
};

// Multi-source BFS distances; kUnreachable where no path exists.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj,
                               std::span<const int> sources);

// Distance between vertex sets: the largest d such that every path with one
// end in X and the other in Y has length at least d, i.e. the minimum over
// pairs of the shortest-path length.  0 when the sets intersect,
// kUnreachable when no connecting path exists.  Throws Errc::empty_set.
int set_distance(const std::vector<std::vector<int>>& adj, std::span<const int> x,
                 std::span<const int> y);

// All triangles (vertex triples, each sorted, list sorted) of the graph.
std::vector<std::array<int, 3>> find_triangles(const std::vector<std::vector<int>>& adj);

// Minimum set_distance over pairs of distinct triangles; kUnreachable when
// the graph has fewer than two triangles.
int min_triangle_pair_distance(const std::vector<std::vector<int>>& adj);

// Identification of two nonadjacent vertices: simple graph on n-1 vertices
// with merged neighborhoods, loops and parallel edges removed.  The merged
// vertex keeps id min(u,v); ids above max(u,v) shift down by one.  If
// old_to_new is non-null it receives the vertex relabeling.
// Throws Errc::adjacent_pair when u,v are adjacent, Errc::invalid_argument
// when u == v or out of range.
SimpleGraph identify_vertices(const SimpleGraph& g, int u, int v,
                              std::vector<int>* old_to_new = nullptr);

}  // namespace plancol
