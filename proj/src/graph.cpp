#include "plancol/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "plancol/errors.hpp"

namespace plancol {

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) fail(Errc::self_loop, "edge endpoints equal");
  auto insert_sorted = [](std::vector<int>& a, int x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it == a.end() || *it != x) a.insert(it, x);
  };
  insert_sorted(adj[u], v);
  insert_sorted(adj[v], u);
}

long SimpleGraph::edge_count() const {
  long deg_sum = 0;
  for (const auto& a : adj) deg_sum += static_cast<long>(a.size());
  return deg_sum / 2;
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj,
                               std::span<const int> sources) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> dist(n, kUnreachable);
  std::deque<int> queue;
  for (int s : sources) {
    if (s < 0 || s >= n) fail(Errc::invalid_argument, "source vertex out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : adj[u]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int set_distance(const std::vector<std::vector<int>>& adj, std::span<const int> x,
                 std::span<const int> y) {
  if (x.empty() || y.empty()) fail(Errc::empty_set, "set_distance requires nonempty sets");
  std::vector<int> dist = bfs_distances(adj, x);
  int best = kUnreachable;
  for (int v : y) {
    if (v < 0 || v >= static_cast<int>(adj.size()))
      fail(Errc::invalid_argument, "target vertex out of range");
    best = std::min(best, dist[v]);
  }
  return best;
}

std::vector<std::array<int, 3>> find_triangles(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) {
      if (v <= u) continue;
      // common neighbors above v; adjacency lists are sorted
      for (int w : adj[v]) {
        if (w <= v) continue;
        if (std::binary_search(adj[u].begin(), adj[u].end(), w)) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

int min_triangle_pair_distance(const std::vector<std::vector<int>>& adj) {
  auto tris = find_triangles(adj);
  if (tris.size() < 2) return kUnreachable;
  int best = kUnreachable;
  for (size_t i = 0; i < tris.size(); ++i) {
    std::vector<int> dist = bfs_distances(adj, tris[i]);
    for (size_t j = i + 1; j < tris.size(); ++j)
      for (int v : tris[j]) best = std::min(best, dist[v]);
    if (best == 0) return 0;
  }
  return best;
}

SimpleGraph identify_vertices(const SimpleGraph& g, int u, int v,
                              std::vector<int>* old_to_new) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v)
    fail(Errc::invalid_argument, "identify_vertices needs two distinct vertices");
  if (g.has_edge(u, v)) fail(Errc::adjacent_pair, "identifying adjacent vertices creates a loop");
  const int keep = std::min(u, v);
  const int drop = std::max(u, v);
  std::vector<int> relabel(g.n);
  for (int w = 0; w < g.n; ++w) relabel[w] = (w == drop) ? keep : (w > drop ? w - 1 : w);
  SimpleGraph out(g.n - 1);
  for (int w = 0; w < g.n; ++w)
    for (int x : g.adj[w]) {
      if (x < w) continue;
      int a = relabel[w], b = relabel[x];
      if (a != b) out.add_edge(a, b);
    }
  if (old_to_new) *old_to_new = std::move(relabel);
  return out;
}

}  // namespace plancol
