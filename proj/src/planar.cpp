#include "plancol/planar.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "plancol/errors.hpp"

namespace plancol {

std::vector<int> FaceWalk::vertices() const {
  std::vector<int> vs;
  vs.reserve(darts.size());
  for (const Dart& d : darts) vs.push_back(d.first);
  return vs;
}

bool FaceWalk::is_simple_cycle() const {
  if (darts.size() < 3) return false;
  std::vector<int> vs = vertices();
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

CycleRef::CycleRef(std::vector<int> vs) : vertices(std::move(vs)) {
  if (!vertices.empty()) {
    auto it = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), it, vertices.end());
  }
}

bool PlanarEmbedding::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& r = rot_[u];
  return std::find(r.begin(), r.end(), v) != r.end();
}

const std::vector<FaceWalk>& PlanarEmbedding::faces() const {
  if (!connected_) fail(Errc::disconnected_graph, "face operations need a connected embedding");
  return faces_;
}

int PlanarEmbedding::face_of_dart(int u, int v) const {
  if (!connected_) fail(Errc::disconnected_graph, "face operations need a connected embedding");
  const auto& r = rot_[u];
  for (size_t k = 0; k < r.size(); ++k)
    if (r[k] == v) return dart_face_[u][k];
  fail(Errc::invalid_argument, "no such dart");
}

SimpleGraph PlanarEmbedding::graph() const {
  SimpleGraph g(n_);
  for (int u = 0; u < n_; ++u) {
    g.adj[u] = rot_[u];
    std::sort(g.adj[u].begin(), g.adj[u].end());
  }
  return g;
}

namespace {

// Walks the face containing the given dart with the next-clockwise rule:
// after entering v along (u,v), leave along the neighbor following u in the
// clockwise rotation of v.
FaceWalk walk_face(const std::vector<std::vector<int>>& rot, int u0, int v0) {
  FaceWalk walk;
  int u = u0, v = v0;
  do {
    walk.darts.emplace_back(u, v);
    const auto& r = rot[v];
    size_t k = 0;
    while (r[k] != u) ++k;
    int w = r[(k + 1) % r.size()];
    u = v;
    v = w;
  } while (!(u == u0 && v == v0));
  return walk;
}

}  // namespace

PlanarEmbedding build_embedding(const std::vector<std::vector<int>>& rotation_table) {
  const int n = static_cast<int>(rotation_table.size());
  for (int u = 0; u < n; ++u) {
    std::vector<int> seen;
    for (int v : rotation_table[u]) {
      if (v < 0 || v >= n) fail(Errc::invalid_argument, "neighbor id out of range");
      if (v == u) fail(Errc::self_loop, "vertex " + std::to_string(u) + " lists itself");
      seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      fail(Errc::duplicate_neighbor, "vertex " + std::to_string(u) + " repeats a neighbor");
  }
  for (int u = 0; u < n; ++u)
    for (int v : rotation_table[u]) {
      const auto& rv = rotation_table[v];
      if (std::find(rv.begin(), rv.end(), u) == rv.end())
        fail(Errc::asymmetric_adjacency, std::to_string(u) + " lists " + std::to_string(v) +
                                             " but not vice versa");
    }

  PlanarEmbedding e;
  e.n_ = n;
  e.rot_ = rotation_table;
  // canonical rotation: each cyclic order starts at the minimum neighbor id
  for (auto& r : e.rot_)
    if (!r.empty()) {
      auto it = std::min_element(r.begin(), r.end());
      std::rotate(r.begin(), it, r.end());
    }
  long deg_sum = 0;
  for (const auto& r : e.rot_) deg_sum += static_cast<long>(r.size());
  e.m_ = deg_sum / 2;

  // connectivity
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = comps;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : e.rot_[u])
        if (comp[v] == -1) {
          comp[v] = comps;
          queue.push_back(v);
        }
    }
    ++comps;
  }
  e.connected_ = (comps <= 1);

  // trace all faces; validate Euler characteristic per component
  e.dart_face_.assign(n, {});
  for (int u = 0; u < n; ++u) e.dart_face_[u].assign(e.rot_[u].size(), -1);
  std::vector<FaceWalk> faces;
  for (int u = 0; u < n; ++u)
    for (size_t k = 0; k < e.rot_[u].size(); ++k) {
      if (e.dart_face_[u][k] != -1) continue;
      FaceWalk walk = walk_face(e.rot_, u, e.rot_[u][k]);
      int id = static_cast<int>(faces.size());
      for (const Dart& d : walk.darts) {
        const auto& r = e.rot_[d.first];
        for (size_t j = 0; j < r.size(); ++j)
          if (r[j] == d.second && e.dart_face_[d.first][j] == -1) {
            e.dart_face_[d.first][j] = id;
            break;
          }
      }
      faces.push_back(std::move(walk));
    }
  std::vector<long> comp_v(comps, 0), comp_e(comps, 0), comp_f(comps, 0);
  for (int u = 0; u < n; ++u) {
    comp_v[comp[u]] += 1;
    comp_e[comp[u]] += static_cast<long>(e.rot_[u].size());
  }
  for (const FaceWalk& f : faces) comp_f[comp[f.darts[0].first]] += 1;
  for (int c = 0; c < comps; ++c) {
    if (comp_e[c] == 0) continue;  // single vertex: one trivial face, always spherical
    if (comp_v[c] - comp_e[c] / 2 + comp_f[c] != 2)
      fail(Errc::non_spherical, "rotation system does not embed in the sphere");
  }
  e.faces_ = std::move(faces);
  return e;
}

const std::vector<FaceWalk>& trace_faces(const PlanarEmbedding& e) { return e.faces(); }

int set_distance(const PlanarEmbedding& e, std::span<const int> x, std::span<const int> y) {
  return set_distance(e.adjacency(), x, y);
}

std::vector<std::array<int, 3>> find_triangles(const PlanarEmbedding& e) {
  return find_triangles(e.graph().adj);
}

int min_triangle_pair_distance(const PlanarEmbedding& e) {
  return min_triangle_pair_distance(e.graph().adj);
}

void require_cycle_of(const PlanarEmbedding& e, const CycleRef& c) {
  const int k = c.length();
  if (k < 3) fail(Errc::not_a_cycle, "cycle needs at least three vertices");
  std::vector<int> vs = c.vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    fail(Errc::not_a_cycle, "repeated vertex");
  for (int i = 0; i < k; ++i) {
    int u = c.vertices[i], v = c.vertices[(i + 1) % k];
    if (u < 0 || u >= e.vertex_count() || !e.has_edge(u, v))
      fail(Errc::not_a_cycle, "consecutive vertices not adjacent");
  }
}

std::vector<int> face_regions(const PlanarEmbedding& e, const CycleRef& c) {
  require_cycle_of(e, c);
  const auto& faces = e.faces();
  const int k = c.length();

  std::vector<char> on_cycle(e.vertex_count(), 0);
  for (int v : c.vertices) on_cycle[v] = 1;
  auto is_cycle_edge = [&](int u, int v) {
    if (!on_cycle[u] || !on_cycle[v]) return false;
    for (int i = 0; i < k; ++i) {
      int a = c.vertices[i], b = c.vertices[(i + 1) % k];
      if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
  };

  // union faces across every edge not on the cycle; a cycle is a minimal cut
  // of the face-adjacency structure, so exactly two regions remain
  std::vector<int> parent(faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < e.vertex_count(); ++u)
    for (int v : e.rotations()[u]) {
      if (v < u) continue;
      if (is_cycle_edge(u, v)) continue;
      int a = find(e.face_of_dart(u, v));
      int b = find(e.face_of_dart(v, u));
      if (a != b) parent[a] = b;
    }
  int root0 = -1, root1 = -1;
  std::vector<int> region(faces.size());
  for (size_t f = 0; f < faces.size(); ++f) {
    int r = find(static_cast<int>(f));
    if (root0 == -1 || r == root0) {
      root0 = (root0 == -1) ? r : root0;
      region[f] = 0;
    } else if (root1 == -1 || r == root1) {
      root1 = (root1 == -1) ? r : root1;
      region[f] = 1;
    } else {
      fail(Errc::internal, "cycle does not split the sphere into two regions");
    }
  }
  if (root1 == -1) fail(Errc::internal, "cycle does not split the sphere into two regions");
  return region;
}

bool is_separating_cycle(const PlanarEmbedding& e, const CycleRef& c) {
  std::vector<int> region = face_regions(e, c);
  std::vector<char> on_cycle(e.vertex_count(), 0);
  for (int v : c.vertices) on_cycle[v] = 1;
  long inside[2] = {0, 0};
  for (int v = 0; v < e.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    if (e.rotations()[v].empty()) fail(Errc::internal, "isolated vertex in connected embedding");
    inside[region[e.face_of_dart(v, e.rotations()[v][0])]] += 1;
  }
  return inside[0] > 0 && inside[1] > 0;
}

bool is_induced_cycle(const PlanarEmbedding& e, const CycleRef& c) {
  require_cycle_of(e, c);
  const int k = c.length();
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;  // consecutive around the wrap
      if (e.has_edge(c.vertices[i], c.vertices[j])) return false;
    }
  return true;
}

SimpleGraph identify_vertices(const PlanarEmbedding& e, int u, int v,
                              std::vector<int>* old_to_new) {
  return identify_vertices(e.graph(), u, v, old_to_new);
}

}  // namespace plancol
