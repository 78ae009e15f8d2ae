#include "plancol/generate.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <string>
#include <unordered_set>

#include "plancol/errors.hpp"
#include "plancol/graph.hpp"

namespace plancol {

namespace {

int pos_of(const std::vector<int>& rot_v, int u) {
  for (size_t k = 0; k < rot_v.size(); ++k)
    if (rot_v[k] == u) return static_cast<int>(k);
  return -1;
}

// A corner is the angular sector at `vertex` entered from neighbor at
// rotation index `entry`; a face is its cyclic list of corners.
struct Corner {
  int vertex;
  int entry;
};

std::vector<std::vector<Corner>> face_corners(const RotationTable& rot) {
  const int n = static_cast<int>(rot.size());
  std::vector<std::vector<char>> used(n);
  for (int v = 0; v < n; ++v) used[v].assign(rot[v].size(), 0);
  std::vector<std::vector<Corner>> faces;
  for (int u0 = 0; u0 < n; ++u0)
    for (size_t k0 = 0; k0 < rot[u0].size(); ++k0) {
      if (used[u0][k0]) continue;
      std::vector<Corner> face;
      int u = u0, k = static_cast<int>(k0);
      do {
        used[u][k] = 1;
        int v = rot[u][k];
        int p = pos_of(rot[v], u);
        face.push_back(Corner{v, p});
        u = v;
        k = (p + 1) % static_cast<int>(rot[v].size());
      } while (!(u == u0 && k == static_cast<int>(k0)));
      faces.push_back(std::move(face));
    }
  return faces;
}

bool adjacent(const RotationTable& rot, int u, int v) {
  return pos_of(rot[u], v) >= 0;
}

int common_neighbors(const RotationTable& rot, int a, int b) {
  int cnt = 0;
  for (int x : rot[a])
    if (pos_of(rot[b], x) >= 0) ++cnt;
  return cnt;
}

int count_triangles(const RotationTable& rot) {
  int cnt = 0;
  const int n = static_cast<int>(rot.size());
  for (int u = 0; u < n; ++u)
    for (int v : rot[u]) {
      if (v <= u) continue;
      for (int w : rot[v])
        if (w > v && adjacent(rot, u, w)) ++cnt;
    }
  return cnt;
}

std::vector<std::vector<int>> sorted_adj(const RotationTable& rot) {
  std::vector<std::vector<int>> adj = rot;
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

// Constraint gate for a candidate that arose by adding edge (a,b); pass
// a = -1 for pendant additions (those never create triangles).
bool constraint_ok(const RotationTable& rot, GenConstraint c, int delta, int a, int b) {
  switch (c) {
    case GenConstraint::none:
      return true;
    case GenConstraint::triangle_free:
      return a < 0 || common_neighbors(rot, a, b) == 0;
    case GenConstraint::max_one_triangle:
      return a < 0 || count_triangles(rot) <= 1;
    case GenConstraint::min_triangle_distance: {
      if (a < 0 || delta <= 0) return true;
      int d = min_triangle_pair_distance(sorted_adj(rot));
      return d == kUnreachable || d >= delta;
    }
  }
  return true;
}

RotationTable with_chord(const RotationTable& rot, const Corner& ca, const Corner& cb) {
  RotationTable out = rot;
  int a = ca.vertex, b = cb.vertex;
  // insert each endpoint into the other's rotation just after the entry
  // neighbor, placing the new edge inside the shared face.  When both
  // corners sit at distinct vertices the two insertions do not interact.
  out[a].insert(out[a].begin() + ca.entry + 1, b);
  out[b].insert(out[b].begin() + cb.entry + 1, a);
  return out;
}

RotationTable with_pendant(const RotationTable& rot, const Corner& ca) {
  RotationTable out = rot;
  int x = static_cast<int>(out.size());
  out[ca.vertex].insert(out[ca.vertex].begin() + ca.entry + 1, x);
  out.push_back({ca.vertex});
  return out;
}

// ---- canonical codes ------------------------------------------------------

// Encodes the embedding from one root dart and orientation: vertices get
// labels in first-visit order; each vertex emits its rotation (starting from
// the entry neighbor, in the chosen direction) as labels, ending with 0xff.
// The code is decodable back into a rotation table.
void encode_from(const RotationTable& rot, int root_u, int root_k, bool flip,
                 std::string& out) {
  const int n = static_cast<int>(rot.size());
  static thread_local std::vector<int> label;
  label.assign(n, -1);
  static thread_local std::vector<std::pair<int, int>> order;  // (vertex, entry neighbor)
  order.clear();
  label[root_u] = 0;
  order.emplace_back(root_u, rot[root_u][root_k]);
  int next = 1;
  out.clear();
  for (size_t idx = 0; idx < order.size(); ++idx) {
    auto [v, entry] = order[idx];
    const auto& r = rot[v];
    const int deg = static_cast<int>(r.size());
    const int p0 = pos_of(r, entry);
    for (int t = 0; t < deg; ++t) {
      int w = r[((p0 + (flip ? -t : t)) % deg + deg) % deg];
      if (label[w] == -1) {
        label[w] = next++;
        order.emplace_back(w, v);
      }
      out.push_back(static_cast<char>(label[w]));
    }
    out.push_back(static_cast<char>(0xff));
  }
}

}  // namespace

std::string embedding_code(const RotationTable& rot) {
  const int n = static_cast<int>(rot.size());
  if (n == 1) return std::string(1, static_cast<char>(0xff));
  // roots restricted to darts with the lexicographically least degree pair
  std::pair<int, int> best_inv{INT_MAX, INT_MAX};
  for (int u = 0; u < n; ++u)
    for (int v : rot[u])
      best_inv = std::min(best_inv, {static_cast<int>(rot[u].size()),
                                     static_cast<int>(rot[v].size())});
  std::string best, cur;
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(rot[u].size()) != best_inv.first) continue;
    for (size_t k = 0; k < rot[u].size(); ++k) {
      if (static_cast<int>(rot[rot[u][k]].size()) != best_inv.second) continue;
      for (bool flip : {false, true}) {
        encode_from(rot, u, static_cast<int>(k), flip, cur);
        if (best.empty() || cur < best) best.swap(cur);
      }
    }
  }
  return best;
}

namespace {

RotationTable decode(const std::string& code) {
  RotationTable rot;
  std::vector<int> row;
  for (char ch : code) {
    unsigned char b = static_cast<unsigned char>(ch);
    if (b == 0xff) {
      rot.push_back(row);
      row.clear();
    } else {
      row.push_back(b);
    }
  }
  return rot;
}

int edge_cap(int n, GenConstraint c) {
  if (n <= 2) return std::max(0, n - 1);
  switch (c) {
    case GenConstraint::triangle_free: return 2 * n - 4;
    case GenConstraint::max_one_triangle: return 2 * n - 3;
    default: return 3 * n - 6;
  }
}

}  // namespace

void for_each_plane_graph(const GenSpec& spec,
                          const std::function<void(const RotationTable&)>& sink) {
  if (spec.n_max < 2) fail(Errc::infeasible_constraint, "need n_max >= 2");
  const int m_cap = edge_cap(spec.n_max, spec.constraint);

  // levels keyed by edge count; every augmentation adds one edge
  std::map<int, std::vector<std::string>> level;
  std::map<int, std::unordered_set<std::string>> seen;

  RotationTable k2{{1}, {0}};
  std::string code0 = embedding_code(k2);
  level[1].push_back(code0);
  seen[1].insert(code0);
  sink(k2);

  auto offer = [&](int m, RotationTable&& cand) {
    std::string code = embedding_code(cand);
    auto [it, inserted] = seen[m].insert(std::move(code));
    if (!inserted) return;
    level[m].push_back(*it);
    sink(cand);
  };

  for (int m = 1; m <= m_cap; ++m) {
    auto it = level.find(m);
    if (it == level.end()) continue;
    for (const std::string& code : it->second) {
      RotationTable rot = decode(code);
      const int n = static_cast<int>(rot.size());
      auto faces = face_corners(rot);
      // chords
      if (m + 1 <= edge_cap(n, spec.constraint)) {
        for (const auto& face : faces) {
          const int fc = static_cast<int>(face.size());
          for (int i = 0; i < fc; ++i)
            for (int j = i + 1; j < fc; ++j) {
              int a = face[i].vertex, b = face[j].vertex;
              if (a == b || adjacent(rot, a, b)) continue;
              if (spec.constraint == GenConstraint::triangle_free &&
                  common_neighbors(rot, a, b) > 0)
                continue;
              RotationTable cand = with_chord(rot, face[i], face[j]);
              if (!constraint_ok(cand, spec.constraint, spec.delta, a, b)) continue;
              offer(m + 1, std::move(cand));
            }
        }
      }
      // pendants
      if (n + 1 <= spec.n_max) {
        for (const auto& face : faces)
          for (const Corner& c : face) offer(m + 1, with_pendant(rot, c));
      }
    }
    seen.erase(m);  // children live at m+1; this level is complete
  }
}

std::vector<PlanarEmbedding> gen_planar(int n, GenConstraint constraint, int delta) {
  if (n < 3) fail(Errc::infeasible_constraint, "generator needs n >= 3");
  std::vector<PlanarEmbedding> out;
  GenSpec spec{n, constraint, delta};
  for_each_plane_graph(spec, [&](const RotationTable& rot) {
    if (static_cast<int>(rot.size()) == n) out.push_back(build_embedding(rot));
  });
  return out;
}

namespace {

int rot_index(const std::vector<int>& xs, int x) {
  for (size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == x) return static_cast<int>(i);
  fail(Errc::invalid_argument, "neighbor not present");
}

}  // namespace

RotationTable add_chord(const RotationTable& rot, int a, int b) {
  PlanarEmbedding e = build_embedding(rot);
  for (const FaceWalk& walk : e.faces()) {
    int ua = -1, ub = -1;
    for (const Dart& d : walk.darts) {
      if (d.second == a && ua == -1) ua = d.first;
      if (d.second == b && ub == -1) ub = d.first;
    }
    if (ua == -1 || ub == -1) continue;
    RotationTable table = e.rotations();
    table[a].insert(table[a].begin() + rot_index(table[a], ua) + 1, b);
    table[b].insert(table[b].begin() + rot_index(table[b], ub) + 1, a);
    return table;
  }
  fail(Errc::invalid_argument, "vertices share no face");
}

RotationTable subdivide_edge(const RotationTable& rot, int u, int v) {
  RotationTable out = rot;
  const int w = static_cast<int>(out.size());
  out[u][rot_index(out[u], v)] = w;
  out[v][rot_index(out[v], u)] = w;
  out.push_back({u, v});
  return out;
}

RotationTable insert_ring_in_quad(const RotationTable& rot, const std::array<int, 4>& quad,
                                  std::array<int, 4>* ring) {
  PlanarEmbedding e = build_embedding(rot);
  const FaceWalk* face = nullptr;
  for (const FaceWalk& walk : e.faces()) {
    if (walk.length() != 4 || !walk.is_simple_cycle()) continue;
    std::vector<int> have = walk.vertices(), want(quad.begin(), quad.end());
    std::sort(have.begin(), have.end());
    std::sort(want.begin(), want.end());
    if (have == want) {
      face = &walk;
      break;
    }
  }
  if (!face) fail(Errc::invalid_argument, "no quadrilateral face on those vertices");
  std::vector<int> q = face->vertices();
  const int n = static_cast<int>(rot.size());
  for (int orientation = 0; orientation < 2; ++orientation) {
    RotationTable out = e.rotations();
    for (int j = 0; j < 4; ++j) {
      int prev_q = q[(j + 3) % 4];
      out[q[j]].insert(out[q[j]].begin() + rot_index(out[q[j]], prev_q) + 1, n + j);
    }
    for (int j = 0; j < 4; ++j) {
      int left = n + (j + 3) % 4, right = n + (j + 1) % 4;
      if (orientation == 0)
        out.push_back({q[j], right, left});
      else
        out.push_back({q[j], left, right});
    }
    try {
      build_embedding(out);
    } catch (const Error& err) {
      if (err.code() == Errc::non_spherical && orientation == 0) continue;
      throw;
    }
    if (ring)
      for (int j = 0; j < 4; ++j) (*ring)[j] = n + j;
    return out;
  }
  fail(Errc::internal, "no orientation embeds the nested ring");
}

RotationTable gen_planar_random(int n, GenConstraint constraint, int delta, double edge_bias,
                                std::mt19937_64& rng) {
  if (n < 2) fail(Errc::infeasible_constraint, "generator needs n >= 2");
  edge_bias = std::min(edge_bias, 0.9);
  RotationTable rot{{1}, {0}};
  auto random_corner = [&](const std::vector<Corner>& face) {
    return face[std::uniform_int_distribution<int>(0, static_cast<int>(face.size()) - 1)(rng)];
  };
  auto try_chord = [&]() {
    auto faces = face_corners(rot);
    const auto& f =
        faces[std::uniform_int_distribution<int>(0, static_cast<int>(faces.size()) - 1)(rng)];
    Corner ca = random_corner(f), cb = random_corner(f);
    if (ca.vertex == cb.vertex || adjacent(rot, ca.vertex, cb.vertex)) return;
    RotationTable cand = with_chord(rot, ca, cb);
    if (constraint_ok(cand, constraint, delta, ca.vertex, cb.vertex)) rot = std::move(cand);
  };
  while (static_cast<int>(rot.size()) < n) {
    if (std::uniform_real_distribution<double>(0, 1)(rng) < edge_bias) {
      try_chord();
      continue;
    }
    auto faces = face_corners(rot);
    const auto& f =
        faces[std::uniform_int_distribution<int>(0, static_cast<int>(faces.size()) - 1)(rng)];
    rot = with_pendant(rot, random_corner(f));
  }
  for (int attempts = 2 * n; attempts > 0; --attempts) try_chord();
  return rot;
}

}  // namespace plancol
