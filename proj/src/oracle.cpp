#include "plancol/oracle.hpp"

#include <algorithm>

#include "plancol/errors.hpp"

namespace plancol {

namespace {

// Domains as bitmasks over bits 1..3.
constexpr unsigned kAll = 0b1110u;

int popcount3(unsigned m) { return (m >> 1 & 1) + (m >> 2 & 1) + (m >> 3 & 1); }

int lowest_color(unsigned m) {
  for (int c = 1; c <= 3; ++c)
    if (m >> c & 1u) return c;
  return 0;
}

struct Solver {
  const SimpleGraph& g;
  std::vector<unsigned> dom;
  std::vector<int> fixed;  // 0 = open, else the assigned color

  explicit Solver(const SimpleGraph& graph) : g(graph), dom(graph.n, kAll), fixed(graph.n, 0) {}

  // Assigns v := c and propagates forced moves; records touched vertices so
  // the caller can undo.  Returns false on a wiped-out domain.
  bool assign(int v, int c, std::vector<std::pair<int, unsigned>>& undo_dom,
              std::vector<int>& undo_fix) {
    std::vector<int> stack{v};
    undo_dom.emplace_back(v, dom[v]);
    dom[v] = 1u << c;
    undo_fix.push_back(v);
    fixed[v] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      unsigned forbid = dom[u];
      for (int w : g.adj[u]) {
        if (!(dom[w] & forbid)) continue;
        if (fixed[w]) {
          if (fixed[w] == lowest_color(forbid)) return false;
          continue;
        }
        undo_dom.emplace_back(w, dom[w]);
        dom[w] &= ~forbid;
        if (dom[w] == 0) return false;
        if (popcount3(dom[w]) == 1) {
          undo_fix.push_back(w);
          fixed[w] = lowest_color(dom[w]);
          stack.push_back(w);
        }
      }
    }
    return true;
  }

  bool solve() {
    int v = -1;
    for (int u = 0; u < g.n; ++u)
      if (!fixed[u]) {
        v = u;
        break;
      }
    if (v == -1) return true;
    for (int c = 1; c <= 3; ++c) {
      if (!(dom[v] >> c & 1u)) continue;
      std::vector<std::pair<int, unsigned>> undo_dom;
      std::vector<int> undo_fix;
      if (assign(v, c, undo_dom, undo_fix) && solve()) return true;
      for (auto it = undo_dom.rbegin(); it != undo_dom.rend(); ++it) dom[it->first] = it->second;
      for (int u : undo_fix) fixed[u] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<ThreeColoring> solve_3coloring(const PrecoloringInstance& inst) {
  const SimpleGraph& g = inst.graph;
  if (inst.fixed.size() != g.n) fail(Errc::invalid_argument, "precoloring size mismatch");
  require_proper(g.adj, inst.fixed);
  Solver solver(g);
  std::vector<std::pair<int, unsigned>> undo_dom;
  std::vector<int> undo_fix;
  for (int v = 0; v < g.n; ++v) {
    Color c = inst.fixed.color[v];
    if (c == 0 || solver.fixed[v] == c) continue;
    if (!(solver.dom[v] >> c & 1u) || solver.fixed[v] != 0) return std::nullopt;
    if (!solver.assign(v, c, undo_dom, undo_fix)) return std::nullopt;
  }
  if (!solver.solve()) return std::nullopt;
  ThreeColoring out(g.n);
  for (int v = 0; v < g.n; ++v) out.color[v] = solver.fixed[v];
  require_proper_total(g.adj, out);
  return out;
}

bool is_critical(const SimpleGraph& g, const std::optional<CycleRef>& c0,
                 const ThreeColoring& phi0) {
  if (solve_3coloring({g, phi0})) return false;

  std::vector<char> on_c0(g.n, 0);
  auto c0_edge = [&](int u, int v) {
    if (!c0) return false;
    const int k = c0->length();
    for (int i = 0; i < k; ++i) {
      int a = c0->vertices[i], b = c0->vertices[(i + 1) % k];
      if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
  };
  if (c0)
    for (int v : c0->vertices) on_c0[v] = 1;

  // single-edge deletions outside c0
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) {
      if (v < u || c0_edge(u, v)) continue;
      SimpleGraph h(g.n);
      for (int a = 0; a < g.n; ++a)
        for (int b : g.adj[a])
          if (b > a && !(a == u && b == v)) h.add_edge(a, b);
      if (!solve_3coloring({h, phi0})) return false;
    }
  // single-vertex deletions outside c0 (kept on the full vertex range with
  // the vertex isolated and uncolored, which is equivalent for extension)
  for (int w = 0; w < g.n; ++w) {
    if (on_c0[w]) continue;
    SimpleGraph h(g.n);
    for (int a = 0; a < g.n; ++a)
      for (int b : g.adj[a])
        if (b > a && a != w && b != w) h.add_edge(a, b);
    if (!solve_3coloring({h, phi0})) return false;
  }
  return true;
}

std::pair<long, int> mainlemma_statistic(const PlanarEmbedding& e,
                                         const std::optional<CycleRef>& c0) {
  int c0_face = -1;
  if (c0) {
    std::vector<int> want = c0->vertices;
    std::sort(want.begin(), want.end());
    for (size_t f = 0; f < e.faces().size(); ++f) {
      if (!e.faces()[f].is_simple_cycle()) continue;
      std::vector<int> have = e.faces()[f].vertices();
      std::sort(have.begin(), have.end());
      if (have == want) {
        c0_face = static_cast<int>(f);
        break;
      }
    }
    if (c0_face < 0) fail(Errc::invalid_argument, "c0 does not bound a face");
  }
  long sum = 0;
  for (size_t f = 0; f < e.faces().size(); ++f)
    if (e.faces()[f].length() >= 5 || static_cast<int>(f) == c0_face)
      sum += e.faces()[f].length();
  return {sum, static_cast<int>(find_triangles(e).size())};
}

ThreeColoring random_proper_coloring(const std::vector<std::vector<int>>& adj,
                                     std::mt19937_64& rng) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  ThreeColoring phi(n);
  std::vector<std::array<Color, 3>> tries(n);
  for (auto& t : tries) {
    t = {1, 2, 3};
    std::shuffle(t.begin(), t.end(), rng);
  }
  std::function<bool(int)> place = [&](int idx) {
    if (idx == n) return true;
    int v = order[idx];
    for (Color c : tries[v]) {
      bool ok = true;
      for (int w : adj[v])
        if (phi.color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      phi.color[v] = c;
      if (place(idx + 1)) return true;
      phi.color[v] = 0;
    }
    return false;
  };
  if (!place(0)) fail(Errc::invalid_argument, "graph admits no proper 3-coloring");
  require_proper_total(adj, phi);
  return phi;
}

}  // namespace plancol
