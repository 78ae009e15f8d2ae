#include "plancol/tightgeo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "plancol/errors.hpp"

namespace plancol {

BfsLayers bfs_layers(const std::vector<std::vector<int>>& adj, std::span<const int> sources) {
  if (sources.empty()) fail(Errc::empty_set, "layer decomposition needs a nonempty source");
  BfsLayers layers;
  layers.source.assign(sources.begin(), sources.end());
  std::sort(layers.source.begin(), layers.source.end());
  layers.source.erase(std::unique(layers.source.begin(), layers.source.end()),
                      layers.source.end());
  layers.dist = bfs_distances(adj, layers.source);
  return layers;
}

BfsLayers bfs_layers(const PlanarEmbedding& e, std::span<const int> sources) {
  return bfs_layers(e.adjacency(), sources);
}

TightnessReport classify_face(const PlanarEmbedding& e, const BfsLayers& layers, int face_id) {
  const auto& faces = e.faces();
  if (face_id < 0 || face_id >= static_cast<int>(faces.size()))
    fail(Errc::invalid_argument, "face id out of range");
  const FaceWalk& walk = faces[face_id];
  if (!walk.is_simple_cycle()) fail(Errc::non_cycle_face, "face boundary is not a cycle");

  TightnessReport rep;
  rep.face_id = face_id;
  std::vector<int> vs = walk.vertices();
  for (int v : vs) rep.witness_dist.push_back(layers.dist[v]);
  if (std::any_of(rep.witness_dist.begin(), rep.witness_dist.end(),
                  [](int d) { return d == kUnreachable; }))
    return rep;

  const int lo = *std::min_element(rep.witness_dist.begin(), rep.witness_dist.end());
  const int hi = *std::max_element(rep.witness_dist.begin(), rep.witness_dist.end());
  if (lo == hi) {
    rep.cls = FaceClass::equidistant;
    rep.t = lo;
    return rep;
  }
  if (walk.length() == 4 && hi == lo + 1) {
    int lo_count = 0;
    for (int d : rep.witness_dist) lo_count += (d == lo);
    if (lo_count == 2) {
      // the two near vertices must be consecutive around the quad
      for (int i = 0; i < 4; ++i)
        if (rep.witness_dist[i] == lo && rep.witness_dist[(i + 1) % 4] == lo) {
          rep.cls = FaceClass::s_tight;
          rep.t = lo;
          return rep;
        }
    }
  }
  return rep;
}

std::vector<Angle> contaminated_angles(const PlanarEmbedding& e, const BfsLayers& layers, int d,
                                       const std::optional<CycleRef>& c0) {
  const auto& faces = e.faces();
  int c0_face = -1;
  if (c0) {
    std::vector<int> want = c0->vertices;
    std::sort(want.begin(), want.end());
    for (size_t f = 0; f < faces.size(); ++f) {
      if (!faces[f].is_simple_cycle()) continue;
      std::vector<int> have = faces[f].vertices();
      std::sort(have.begin(), have.end());
      if (have == want) {
        c0_face = static_cast<int>(f);
        break;
      }
    }
    if (c0_face < 0) fail(Errc::invalid_argument, "c0 does not bound a face");
  }
  std::vector<Angle> out;
  for (size_t f = 0; f < faces.size(); ++f) {
    const bool long_face = faces[f].length() >= 5;
    if (!long_face && static_cast<int>(f) != c0_face) continue;
    std::vector<int> vs = faces[f].vertices();
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
      if (layers.dist[v] != kUnreachable && layers.dist[v] <= d - 1)
        out.push_back(Angle{v, static_cast<int>(f)});
  }
  std::sort(out.begin(), out.end(),
            [](const Angle& a, const Angle& b) {
              return a.vertex != b.vertex ? a.vertex < b.vertex : a.face < b.face;
            });
  return out;
}

std::optional<int> find_quiet_window(std::span<const Angle> angles, const BfsLayers& layers,
                                     int d, int width) {
  std::vector<char> contaminated(std::max(d, 1), 0);
  for (const Angle& a : angles) {
    int dist = layers.dist[a.vertex];
    if (dist >= 0 && dist < d) contaminated[dist] = 1;
  }
  for (int i0 = 2; i0 + width <= d - 1; ++i0) {
    bool quiet = true;
    for (int i = i0 - 1; i <= i0 + width && quiet; ++i)
      if (i >= 0 && i < d && contaminated[i]) quiet = false;
    if (quiet) return i0;
  }
  return std::nullopt;
}

std::optional<int> is_equidistant(const BfsLayers& layers, const CycleRef& c) {
  if (c.vertices.empty()) return std::nullopt;
  int t = layers.dist[c.vertices[0]];
  if (t == kUnreachable) return std::nullopt;
  for (int v : c.vertices)
    if (layers.dist[v] != t) return std::nullopt;
  return t;
}

namespace {

// Adjacency of the subgraph induced by one layer, over original vertex ids.
std::vector<std::vector<int>> layer_adjacency(const std::vector<std::vector<int>>& adj,
                                              const BfsLayers& layers, int i0,
                                              std::vector<int>* members) {
  std::vector<std::vector<int>> sub(adj.size());
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if (layers.dist[v] != i0) continue;
    if (members) members->push_back(v);
    for (int w : adj[v])
      if (layers.dist[w] == i0) sub[v].push_back(w);
  }
  return sub;
}

// Shortest simple cycle within the given subgraph; deterministic over
// ascending roots and neighbor order.
std::optional<std::vector<int>> shortest_cycle_in(const std::vector<std::vector<int>>& sub,
                                                  const std::vector<int>& members) {
  std::optional<std::vector<int>> best;
  const int n = static_cast<int>(sub.size());
  std::vector<int> dist(n), par(n);
  for (int root : members) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(par.begin(), par.end(), -1);
    dist[root] = 0;
    std::vector<int> queue{root};
    for (size_t qh = 0; qh < queue.size(); ++qh) {
      int u = queue[qh];
      if (best && 2 * dist[u] + 1 >= static_cast<int>(best->size())) continue;
      for (int w : sub[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          par[w] = u;
          queue.push_back(w);
        } else if (w != par[u] && par[w] != u) {
          // candidate cycle through root; accept only vertex-disjoint arms
          std::vector<int> left, right;
          for (int x = u; x != -1; x = par[x]) left.push_back(x);
          for (int x = w; x != -1; x = par[x]) right.push_back(x);
          bool disjoint = true;
          for (size_t i = 0; i + 1 < left.size() && disjoint; ++i)
            for (size_t j = 0; j + 1 < right.size() && disjoint; ++j)
              if (left[i] == right[j]) disjoint = false;
          if (!disjoint) continue;
          std::vector<int> cycle(left.begin(), left.end());  // u .. root
          std::reverse(cycle.begin(), cycle.end());          // root .. u
          for (size_t j = 0; j + 1 < right.size(); ++j)
            cycle.push_back(right[j]);  // w .. just below root
          if (!best || cycle.size() < best->size()) best = cycle;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::optional<CycleRef> find_equidistant_cycle(const PlanarEmbedding& e, const BfsLayers& layers,
                                               int i0) {
  std::vector<int> members;
  auto sub = layer_adjacency(e.adjacency(), layers, i0, &members);
  auto cyc = shortest_cycle_in(sub, members);
  if (!cyc) return std::nullopt;
  return CycleRef(*cyc);
}

int lemma_window(int s) {
  if (s < 1) fail(Errc::invalid_argument, "cycle length bound must be positive");
  return 2 * s + static_cast<int>(std::ceil(7 * std::log2(std::max(s, 1)))) + 7;
}

namespace {

// All simple cycles of a small subgraph, for the exhaustive audit: counts a
// cycle once by rooting it at its minimum vertex and fixing a direction.
void enumerate_cycles(const std::vector<std::vector<int>>& sub, const std::vector<int>& members,
                      int& max_len) {
  std::vector<char> in_path(sub.size(), 0);
  std::vector<int> path;
  std::function<void(int, int)> dfs = [&](int root, int u) {
    for (int w : sub[u]) {
      if (w == root && path.size() >= 3) {
        if (path.size() >= 3 && path[1] < path.back())  // one direction only
          max_len = std::max(max_len, static_cast<int>(path.size()));
        continue;
      }
      if (w <= root || in_path[w]) continue;
      in_path[w] = 1;
      path.push_back(w);
      dfs(root, w);
      path.pop_back();
      in_path[w] = 0;
    }
  };
  for (int root : members) {
    in_path[root] = 1;
    path = {root};
    dfs(root, root);
    in_path[root] = 0;
  }
}

}  // namespace

std::vector<LayerCycleStats> equidistant_length_audit(const PlanarEmbedding& e,
                                                      const BfsLayers& layers, int d,
                                                      int max_exhaustive) {
  std::vector<LayerCycleStats> out;
  for (int i = 1; i <= d - 1; ++i) {
    std::vector<int> members;
    auto sub = layer_adjacency(e.adjacency(), layers, i, &members);
    if (members.empty()) continue;
    LayerCycleStats st;
    st.distance = i;
    st.vertex_count = static_cast<int>(members.size());
    if (auto cyc = shortest_cycle_in(sub, members)) st.girth = static_cast<int>(cyc->size());
    if (st.girth && st.vertex_count <= max_exhaustive) {
      int max_len = 0;
      enumerate_cycles(sub, members, max_len);
      if (max_len >= 3) st.max_cycle_len = max_len;
    }
    out.push_back(std::move(st));
  }
  return out;
}

const char* failure_reason_name(FailureWitness::Reason r) {
  switch (r) {
    case FailureWitness::Reason::precondition_face: return "PreconditionFace";
    case FailureWitness::Reason::window_exhausted: return "WindowExhausted";
    case FailureWitness::Reason::non_separating: return "NonSeparating";
    case FailureWitness::Reason::outward_mismatch: return "OutwardMismatch";
    case FailureWitness::Reason::degenerate_collision: return "DegenerateCollision";
  }
  return "Unknown";
}

namespace {

// Replaces a cycle by a strictly shorter one through a chord until no chord
// remains; vertices stay within the original cycle's vertex set.  Ties
// break toward the arc with the lower starting position.
std::vector<int> shorten_to_induced(const PlanarEmbedding& e, std::vector<int> cycle) {
  for (;;) {
    const int k = static_cast<int>(cycle.size());
    int ci = -1, cj = -1;
    for (int i = 0; i < k && ci < 0; ++i)
      for (int j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (e.has_edge(cycle[i], cycle[j])) {
          ci = i;
          cj = j;
          break;
        }
      }
    if (ci < 0) return cycle;
    // two candidates close through the chord: the arc ci..cj and the arc
    // cj..ci; keep the shorter, ties toward the arc starting at ci
    const int len_inner = cj - ci + 1;
    const int len_outer = k - (cj - ci) + 1;
    std::vector<int> next;
    if (len_inner <= len_outer) {
      for (int p = ci; p <= cj; ++p) next.push_back(cycle[p]);
    } else {
      for (int p = cj;; p = (p + 1) % k) {
        next.push_back(cycle[p]);
        if (p == ci) break;
      }
    }
    cycle = std::move(next);
  }
}

int face_min_distance(const FaceWalk& walk, const BfsLayers& layers) {
  int lo = kUnreachable;
  for (const Dart& d : walk.darts) lo = std::min(lo, layers.dist[d.first]);
  return lo;
}

}  // namespace

GrowResult grow_cylindrical_grid(const PlanarEmbedding& e, const BfsLayers& layers,
                                 const CycleRef& c0, int window,
                                 std::vector<std::string>* trace) {
  auto note = [&](const std::string& line) {
    if (trace) trace->push_back(line);
  };
  std::optional<int> t0 = is_equidistant(layers, c0);
  if (!t0) fail(Errc::invalid_argument, "starting cycle is not equidistant");
  const int i0 = *t0;

  // precondition: every face at distance within the window is S-tight
  for (size_t f = 0; f < e.faces().size(); ++f) {
    int fd = face_min_distance(e.faces()[f], layers);
    if (fd < i0 || fd > i0 + window || fd == kUnreachable) continue;
    bool tight = false;
    if (e.faces()[f].is_simple_cycle())
      tight = classify_face(e, layers, static_cast<int>(f)).cls == FaceClass::s_tight;
    if (!tight)
      return FailureWitness{FailureWitness::Reason::precondition_face, static_cast<int>(f), fd,
                            "face in window not bounded by an S-tight cycle"};
  }

  std::vector<int> cycle = shorten_to_induced(e, c0.vertices);
  int t = i0;
  int restarts = 0;
  note("start cycle length " + std::to_string(cycle.size()) + " at distance " +
       std::to_string(t));

  std::vector<std::vector<int>> hoops{cycle};
  for (;;) {
    const int r = static_cast<int>(cycle.size());
    if (static_cast<int>(hoops.size()) >= r + 5) break;

    const std::vector<int> top = hoops.back();
    const int tau = t + static_cast<int>(hoops.size()) - 1;
    if (tau > i0 + window)
      return FailureWitness{FailureWitness::Reason::window_exhausted, -1, tau,
                            "window ends before the grid reaches full height"};

    // restart when the current top hoop is not induced
    {
      CycleRef ref(top);
      if (!is_induced_cycle(e, ref)) {
        cycle = shorten_to_induced(e, top);
        if (static_cast<int>(cycle.size()) >= static_cast<int>(top.size()))
          fail(Errc::internal, "shortening did not shrink the cycle");
        t = tau;
        hoops = {cycle};
        ++restarts;
        note("restart " + std::to_string(restarts) + ": chord, cycle length " +
             std::to_string(top.size()) + " -> " + std::to_string(cycle.size()) +
             " at distance " + std::to_string(t));
        continue;
      }
    }

    // split faces into the side holding S and the far side
    std::vector<int> region;
    try {
      region = face_regions(e, CycleRef(top));
    } catch (const Error&) {
      return FailureWitness{FailureWitness::Reason::non_separating, -1, tau,
                            "hoop does not split the sphere"};
    }
    int s0 = layers.source[0];
    if (e.rotations()[s0].empty())
      return FailureWitness{FailureWitness::Reason::non_separating, -1, tau,
                            "source vertex is isolated"};
    const int s_side = region[e.face_of_dart(s0, e.rotations()[s0][0])];

    const int rr = static_cast<int>(top.size());
    std::vector<int> outward(rr, -1), outward2(rr, -1);
    for (int p = 0; p < rr; ++p) {
      const int u = top[p], v = top[(p + 1) % rr];
      const int fa = e.face_of_dart(u, v), fb = e.face_of_dart(v, u);
      int fo;
      if (region[fa] != s_side && region[fb] == s_side)
        fo = fa;
      else if (region[fb] != s_side && region[fa] == s_side)
        fo = fb;
      else
        return FailureWitness{FailureWitness::Reason::non_separating, fa, tau,
                              "edge has no unique outward face"};
      TightnessReport rep;
      if (!e.faces()[fo].is_simple_cycle() ||
          (rep = classify_face(e, layers, fo)).cls != FaceClass::s_tight || rep.t != tau)
        return FailureWitness{FailureWitness::Reason::precondition_face, fo, tau,
                              "outward face not S-tight at the hoop distance"};
      // boundary reads u, v, v', u' in order; locate u followed by v or v by u
      std::vector<int> quad = e.faces()[fo].vertices();
      int upos = -1;
      for (int q = 0; q < 4; ++q)
        if (quad[q] == u) upos = q;
      int vprime, uprime;
      if (quad[(upos + 1) % 4] == v) {
        vprime = quad[(upos + 2) % 4];
        uprime = quad[(upos + 3) % 4];
      } else if (quad[(upos + 3) % 4] == v) {
        vprime = quad[(upos + 2) % 4];
        uprime = quad[(upos + 1) % 4];
      } else {
        fail(Errc::internal, "outward quad does not contain the hoop edge");
      }
      outward[(p + 1) % rr] = vprime;
      outward2[p] = uprime;
    }
    // uniqueness: the two faces at each vertex must name the same neighbor
    for (int p = 0; p < rr; ++p)
      if (outward[p] != outward2[p])
        return FailureWitness{FailureWitness::Reason::outward_mismatch, -1, tau,
                              "vertex " + std::to_string(top[p]) + " has two outward neighbors"};

    // collision: two hoop vertices sharing an outward neighbor restart the
    // growth from the shorter image cycle
    int best_gap = -1, best_p = -1, best_q = -1;
    for (int p = 0; p < rr; ++p)
      for (int q = p + 1; q < rr; ++q)
        if (outward[p] == outward[q]) {
          int gap = std::min(q - p, rr - (q - p));
          if (best_gap < 0 || gap < best_gap) {
            best_gap = gap;
            best_p = p;
            best_q = q;
          }
        }
    if (best_gap >= 0) {
      if (best_gap < 3)
        return FailureWitness{FailureWitness::Reason::degenerate_collision, -1, tau + 1,
                              "collision subpath of length " + std::to_string(best_gap)};
      std::vector<int> image;
      if (best_q - best_p <= rr - (best_q - best_p)) {
        for (int p2 = best_p; p2 < best_q; ++p2) image.push_back(outward[p2]);
      } else {
        for (int p2 = best_q; p2 != best_p; p2 = (p2 + 1) % rr) image.push_back(outward[p2]);
      }
      cycle = shorten_to_induced(e, image);
      if (static_cast<int>(cycle.size()) >= rr) fail(Errc::internal, "collision did not shrink");
      t = tau + 1;
      hoops = {cycle};
      ++restarts;
      note("restart " + std::to_string(restarts) + ": collision, cycle length " +
           std::to_string(rr) + " -> " + std::to_string(cycle.size()) + " at distance " +
           std::to_string(t));
      continue;
    }

    hoops.push_back(outward);
    note("row " + std::to_string(hoops.size()) + " grown at distance " + std::to_string(tau + 1));
  }

  GrownGrid grid;
  grid.r = static_cast<int>(cycle.size());
  grid.hoops = std::move(hoops);
  grid.start_distance = t;
  grid.restarts = restarts;
  return grid;
}

DistCritResult check_distcrit(const SimpleGraph& g,
                              const std::vector<std::vector<int>>& family, const CycleRef& c,
                              int s0_index, int d) {
  if (d < 1) fail(Errc::invalid_argument, "d must be at least 1");
  if (c.length() != 4) fail(Errc::not_length4, "criterion needs a cycle of length four");
  if (s0_index < 0 || s0_index >= static_cast<int>(family.size()))
    fail(Errc::invalid_argument, "family index out of range");
  for (const auto& s : family)
    if (s.empty()) fail(Errc::empty_set, "family member empty");
  {
    std::vector<int> vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      fail(Errc::not_a_cycle, "repeated vertex in cycle");
  }
  for (int i = 0; i < 4; ++i) {
    int u = c.vertices[i], v = c.vertices[(i + 1) % 4];
    if (!g.has_edge(u, v)) fail(Errc::not_a_cycle, "given vertices do not form a cycle");
  }
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (set_distance(g.adj, family[i], family[j]) < 2 * d)
        fail(Errc::family_too_close, "family sets closer than 2d");

  const auto& s0 = family[s0_index];
  if (set_distance(g.adj, c.vertices, s0) > d - 1)
    return {DistCritResult::Verdict::hypothesis_not_met, -1,
            "cycle farther than d-1 from the distinguished set"};

  auto diagonal_triggers = [&](int u, int v) {
    if (g.has_edge(u, v)) return false;  // identification would create a loop
    std::vector<int> relabel;
    SimpleGraph ident = identify_vertices(g, u, v, &relabel);
    std::vector<std::vector<int>> fam2;
    for (const auto& s : family) {
      std::vector<int> m;
      for (int x : s) m.push_back(relabel[x]);
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      fam2.push_back(std::move(m));
    }
    for (size_t i = 0; i < fam2.size(); ++i)
      for (size_t j = i + 1; j < fam2.size(); ++j)
        if (set_distance(ident.adj, fam2[i], fam2[j]) <= 2 * d - 1) return true;
    return false;
  };

  if (!diagonal_triggers(c.vertices[0], c.vertices[2]) ||
      !diagonal_triggers(c.vertices[1], c.vertices[3]))
    return {DistCritResult::Verdict::hypothesis_not_met, -1,
            "some diagonal identification keeps all family sets far apart"};

  // hypotheses hold, so the cycle must straddle layers t and t+1 of s0
  std::vector<int> dist = bfs_distances(g.adj, s0);
  std::array<int, 4> dd{};
  for (int i = 0; i < 4; ++i) dd[i] = dist[c.vertices[i]];
  for (int i = 0; i < 4; ++i) {
    int a = dd[i], b2 = dd[(i + 1) % 4], x = dd[(i + 2) % 4], y = dd[(i + 3) % 4];
    if (a == b2 && x == a + 1 && y == a + 1)
      return {DistCritResult::Verdict::s0_tight, a, ""};
  }
  return {DistCritResult::Verdict::lemma_violation, -1,
          "identification criterion met but the cycle is not tight"};
}

}  // namespace plancol
