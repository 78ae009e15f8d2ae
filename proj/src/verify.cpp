#include "plancol/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <variant>

#include "plancol/errors.hpp"
#include "plancol/generate.hpp"
#include "plancol/gridext.hpp"
#include "plancol/oracle.hpp"
#include "plancol/scans.hpp"
#include "plancol/tightgeo.hpp"
#include "plancol/winding.hpp"

namespace plancol {

namespace {

// ---- independent brute-force oracle (test-side only) ----------------------

// Full 3^f enumeration over the free vertices; deliberately shares no code
// with the backtracking solver it cross-checks.
bool brute_extendable(const SimpleGraph& g, const ThreeColoring& fixed) {
  std::vector<int> free_vs;
  for (int v = 0; v < g.n; ++v)
    if (fixed.color[v] == 0) free_vs.push_back(v);
  std::vector<Color> cur = fixed.color;
  const int f = static_cast<int>(free_vs.size());
  std::vector<int> digit(f, 0);
  for (;;) {
    for (int i = 0; i < f; ++i) cur[free_vs[i]] = digit[i] + 1;
    bool proper = true;
    for (int u = 0; u < g.n && proper; ++u)
      for (int w : g.adj[u])
        if (w > u && cur[u] == cur[w]) {
          proper = false;
          break;
        }
    if (proper) return true;
    int i = 0;
    while (i < f && digit[i] == 2) digit[i++] = 0;
    if (i == f) return false;
    ++digit[i];
  }
}

SimpleGraph graph_of(const RotationTable& rot) {
  SimpleGraph g(static_cast<int>(rot.size()));
  for (int u = 0; u < g.n; ++u)
    for (int v : rot[u])
      if (v > u) g.add_edge(u, v);
  return g;
}

// ---- random host construction ----------------------------------------------

int index_of(const std::vector<int>& xs, int x) {
  for (size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == x) return static_cast<int>(i);
  return -1;
}

// Random 2-connected plane graph whose faces all have length 3 or 4, grown
// by chopping chords off a starting cycle.
RotationTable random_quad_tri_mix(std::mt19937_64& rng) {
  const int k = std::uniform_int_distribution<int>(6, 14)(rng);
  RotationTable rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + k - 1) % k, (i + 1) % k};
  for (;;) {
    PlanarEmbedding e = build_embedding(rot);
    std::vector<int> big;
    for (size_t f = 0; f < e.faces().size(); ++f)
      if (e.faces()[f].length() >= 5) big.push_back(static_cast<int>(f));
    if (big.empty()) return rot;
    int fid = big[std::uniform_int_distribution<size_t>(0, big.size() - 1)(rng)];
    std::vector<int> cyc = e.faces()[fid].vertices();
    const int len = static_cast<int>(cyc.size());
    // chop off a quad most of the time, occasionally a triangle
    int d = (std::uniform_real_distribution<double>(0, 1)(rng) < 0.3) ? 2 : 3;
    int i = std::uniform_int_distribution<int>(0, len - 1)(rng);
    int a = cyc[i], b = cyc[(i + d) % len];
    if (a == b || index_of(rot[a], b) >= 0) continue;
    rot = add_chord(rot, a, b);
  }
}

// ---- criterion bodies -------------------------------------------------------

struct Check {
  bool ok = true;
  long cases = 0;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail << "first failure: " << what;
    }
  }
};

// all proper colorings of the 4-cycle have winding number zero
void crit_prop4(Check& c) {
  RotationTable rot{{1, 3}, {0, 2}, {1, 3}, {0, 2}};
  PlanarEmbedding e = build_embedding(rot);
  int proper_count = 0;
  for (int code = 0; code < 81; ++code) {
    ThreeColoring phi(4);
    int x = code;
    for (int v = 0; v < 4; ++v, x /= 3) phi.color[v] = x % 3 + 1;
    bool proper = true;
    for (int v = 0; v < 4; ++v)
      if (phi.color[v] == phi.color[(v + 1) % 4]) proper = false;
    if (!proper) continue;
    ++proper_count;
    for (size_t f = 0; f < e.faces().size(); ++f)
      c.expect(winding_number(oriented_cycle_of_face(e, static_cast<int>(f)), phi) == 0,
               "nonzero winding on a 4-cycle face");
  }
  c.expect(proper_count == 18, "expected 18 proper colorings of C4");
}

// face winding sum vanishes on grids and on quad/triangle mixes
void crit_wsum0(Check& c) {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 500; ++trial) {
    int r = std::uniform_int_distribution<int>(3, 8)(rng);
    int s = std::uniform_int_distribution<int>(1, 8)(rng);
    CylGrid g = make_grid(r, s);
    ThreeColoring phi = random_proper_coloring(g.emb.adjacency(), rng);
    c.expect(face_winding_sum(g.emb, phi) == 0, "grid winding sum nonzero");
  }
  int mixes = 0, attempts = 0;
  while (mixes < 100 && attempts < 2000) {
    ++attempts;
    RotationTable rot = random_quad_tri_mix(rng);
    SimpleGraph g = graph_of(rot);
    if (!solve_3coloring({g, ThreeColoring(g.n)})) continue;  // mixes may need 4 colors
    PlanarEmbedding e = build_embedding(rot);
    ThreeColoring phi = random_proper_coloring(e.adjacency(), rng);
    c.expect(face_winding_sum(e, phi) == 0, "mix winding sum nonzero");
    ++mixes;
  }
  c.expect(mixes == 100, "could not build 100 colorable mixes");
}

// parity, permutation, and orientation laws of the winding number
void crit_winding_algebra(Check& c) {
  const std::array<Color, 4> cyc = {0, 2, 3, 1};   // 1->2->3->1
  const std::array<Color, 4> swap12 = {0, 2, 1, 3};
  for (int k = 3; k <= 9; ++k) {
    for_each_proper_cycle_coloring(k, [&](const std::vector<Color>& colors) {
      const int w = winding_of_colors(colors);
      c.expect(((w - k) % 2 + 2) % 2 == 0, "parity law violated");
      std::vector<Color> permuted(colors), swapped(colors), reversed(colors);
      for (Color& x : permuted) x = cyc[x];
      for (Color& x : swapped) x = swap12[x];
      std::reverse(reversed.begin(), reversed.end());
      c.expect(winding_of_colors(permuted) == w, "cyclic permutation changed winding");
      c.expect(winding_of_colors(swapped) == -w, "transposition did not negate winding");
      c.expect(winding_of_colors(reversed) == -w, "orientation reversal did not negate winding");
    });
  }
}

// exhaustive one-cuff extension: r = 3..7, all |w|<=1 cuff colorings, all v0
void crit_one_cuff(Check& c) {
  for (int r = 3; r <= 7; ++r) {
    const int s = (r + 3 + 1) / 2;
    CylGrid g = make_grid(r, s);
    for_each_proper_cycle_coloring(r, [&](const std::vector<Color>& colors) {
      if (std::abs(winding_of_colors(colors)) > 1) return;
      for (int v0 = 1; v0 <= r; ++v0) {
        ThreeColoring phi(r * s);
        for (int i = 1; i <= r; ++i) phi.color[g.vertex(i, 1)] = colors[i - 1];
        ThreeColoring psi = extend_one_cuff(g, phi, v0);
        c.expect(is_proper_total(g.emb.adjacency(), psi), "extension not proper");
        bool cuff_kept = true;
        for (int i = 1; i <= r; ++i)
          if (psi.color[g.vertex(i, 1)] != colors[i - 1]) cuff_kept = false;
        c.expect(cuff_kept, "cuff coloring changed");
        std::array<char, 4> used{};
        for (int i = 1; i <= r; ++i)
          if (i != v0) used[psi.color[g.vertex(i, s)]] = 1;
        c.expect(used[1] + used[2] + used[3] <= 2, "far cuff minus v0 uses three colors");
      }
    });
  }
}

// sampled two-cuff extensions, with a solver cross-check on a subsample
void crit_two_cuffs(Check& c) {
  std::mt19937_64 rng(77001);
  for (int r = 3; r <= 6; ++r) {
    CylGrid g = make_grid(r, r + 5);
    std::vector<std::vector<Color>> all;
    for_each_proper_cycle_coloring(r, [&](const std::vector<Color>& cs) { all.push_back(cs); });
    std::vector<std::vector<Color>> low;
    for (const auto& cs : all)
      if (std::abs(winding_of_colors(cs)) <= 1) low.push_back(cs);
    for (int trial = 0; trial < 200; ++trial) {
      const auto& c1 = low[std::uniform_int_distribution<size_t>(0, low.size() - 1)(rng)];
      const int w1 = winding_of_colors(c1);
      std::vector<const std::vector<Color>*> mates;
      for (const auto& cs : all)
        if (winding_of_colors(cs) == w1) mates.push_back(&cs);
      const auto& c2 = *mates[std::uniform_int_distribution<size_t>(0, mates.size() - 1)(rng)];
      ThreeColoring phi(r * (r + 5));
      for (int i = 1; i <= r; ++i) {
        phi.color[g.vertex(i, 1)] = c1[i - 1];
        phi.color[g.vertex(i, g.s)] = c2[i - 1];
      }
      ThreeColoring psi = extend_two_cuffs(g, phi);
      c.expect(is_proper_total(g.emb.adjacency(), psi), "two-cuff extension not proper");
      bool cuffs_kept = true;
      for (int i = 1; i <= r; ++i)
        if (psi.color[g.vertex(i, 1)] != c1[i - 1] || psi.color[g.vertex(i, g.s)] != c2[i - 1])
          cuffs_kept = false;
      c.expect(cuffs_kept, "a cuff coloring changed");
      if (trial < 5) {
        // solver agrees an extension exists
        SimpleGraph sg = g.emb.graph();
        c.expect(static_cast<bool>(solve_3coloring({sg, phi})), "solver finds no extension");
      }
    }
  }
}

// solver agrees with full enumeration on >= 2000 small instances
void crit_oracle_equivalence(Check& c) {
  std::vector<RotationTable> graphs;
  GenSpec spec{6, GenConstraint::none, 0};
  for_each_plane_graph(spec, [&](const RotationTable& rot) {
    if (rot.size() >= 3) graphs.push_back(rot);
  });
  std::mt19937_64 rng(5150);
  while (graphs.size() < 2000) {
    int n = std::uniform_int_distribution<int>(7, 8)(rng);
    graphs.push_back(gen_planar_random(n, GenConstraint::none, 0, 0.5, rng));
  }
  long instances = 0;
  for (const RotationTable& rot : graphs) {
    SimpleGraph g = graph_of(rot);
    ThreeColoring empty(g.n);
    ++instances;
    c.expect(static_cast<bool>(solve_3coloring({g, empty})) == brute_extendable(g, empty),
             "solver disagrees with enumeration (empty precoloring)");
    // one random facial-cycle precoloring per instance
    PlanarEmbedding e = build_embedding(rot);
    std::vector<int> cyc_faces;
    for (size_t f = 0; f < e.faces().size(); ++f)
      if (e.faces()[f].is_simple_cycle()) cyc_faces.push_back(static_cast<int>(f));
    if (cyc_faces.empty()) continue;
    int fid = cyc_faces[std::uniform_int_distribution<size_t>(0, cyc_faces.size() - 1)(rng)];
    std::vector<int> cyc = e.faces()[fid].vertices();
    ThreeColoring pre(g.n);
    Color prev = 0;
    for (size_t p = 0; p < cyc.size(); ++p) {
      Color ch;
      do {
        ch = std::uniform_int_distribution<int>(1, 3)(rng);
      } while (ch == prev || (p + 1 == cyc.size() && ch == pre.color[cyc[0]]));
      pre.color[cyc[p]] = ch;
      prev = ch;
    }
    if (!is_proper(g.adj, pre)) continue;  // a chord of the facial cycle may clash
    ++instances;
    c.expect(static_cast<bool>(solve_3coloring({g, pre})) == brute_extendable(g, pre),
             "solver disagrees with enumeration (facial precoloring)");
  }
  c.expect(instances >= 2000, "fewer than 2000 instances");
}

// the grid grower on clean and perturbed hosts
void crit_grower(Check& c) {
  for (int r = 4; r <= 7; ++r) {
    CylGrid host = make_grid(r, r + 20);
    std::vector<int> cuff = host.hoop(1);
    BfsLayers layers = bfs_layers(host.emb, cuff);
    auto c0 = find_equidistant_cycle(host.emb, layers, 3);
    c.expect(c0.has_value(), "no equidistant cycle at distance 3");
    if (!c0) continue;
    GrowResult res = grow_cylindrical_grid(host.emb, layers, *c0, r + 15);
    c.expect(std::holds_alternative<GrownGrid>(res), "grower failed on a clean host");
    if (!std::holds_alternative<GrownGrid>(res)) continue;
    const GrownGrid& grid = std::get<GrownGrid>(res);
    c.expect(grid.r == r, "grown grid has wrong hoop length");
    c.expect(static_cast<int>(grid.hoops.size()) == r + 5, "grown grid has wrong height");
    for (size_t j = 0; j < grid.hoops.size(); ++j) {
      auto eq = is_equidistant(layers, CycleRef(grid.hoops[j]));
      c.expect(eq.has_value() && *eq == grid.start_distance + static_cast<int>(j),
               "hoop not equidistant at the expected distance");
      // direct subgraph check: hoop edges and rungs must exist in the host
      for (int i = 0; i < grid.r; ++i) {
        c.expect(host.emb.has_edge(grid.hoops[j][i], grid.hoops[j][(i + 1) % grid.r]),
                 "missing hoop edge");
        if (j + 1 < grid.hoops.size())
          c.expect(host.emb.has_edge(grid.hoops[j][i], grid.hoops[j + 1][i]), "missing rung");
      }
    }
  }

  // perturbed host 1: a subdivided edge makes two pentagons in the window
  {
    CylGrid host = make_grid(5, 25);
    RotationTable rot = subdivide_edge(host.emb.rotations(), host.vertex(1, 10),
                                       host.vertex(2, 10));
    PlanarEmbedding e = build_embedding(rot);
    BfsLayers layers = bfs_layers(e, host.hoop(1));
    auto c0 = find_equidistant_cycle(e, layers, 3);
    GrowResult res = grow_cylindrical_grid(e, layers, *c0, 20);
    c.expect(std::holds_alternative<FailureWitness>(res) &&
                 std::get<FailureWitness>(res).reason ==
                     FailureWitness::Reason::precondition_face,
             "subdivided host should fail the face precondition");
  }
  // perturbed host 2: a quad diagonal makes two triangles in the window
  {
    CylGrid host = make_grid(5, 25);
    RotationTable rot =
        add_chord(host.emb.rotations(), host.vertex(1, 8), host.vertex(2, 9));
    PlanarEmbedding e = build_embedding(rot);
    BfsLayers layers = bfs_layers(e, host.hoop(1));
    auto c0 = find_equidistant_cycle(e, layers, 3);
    GrowResult res = grow_cylindrical_grid(e, layers, *c0, 20);
    c.expect(std::holds_alternative<FailureWitness>(res) &&
                 std::get<FailureWitness>(res).reason ==
                     FailureWitness::Reason::precondition_face,
             "chorded host should fail the face precondition");
  }
  // perturbed host 3: a window too small to fit the grid height
  {
    CylGrid host = make_grid(5, 25);
    BfsLayers layers = bfs_layers(host.emb, host.hoop(1));
    auto c0 = find_equidistant_cycle(host.emb, layers, 3);
    GrowResult res = grow_cylindrical_grid(host.emb, layers, *c0, 2);
    c.expect(std::holds_alternative<FailureWitness>(res) &&
                 std::get<FailureWitness>(res).reason ==
                     FailureWitness::Reason::window_exhausted,
             "tiny window should exhaust");
  }
}

// the diagonal-identification criterion on constructed instances
SimpleGraph distcrit_instance(int d, int t, bool third_set,
                              std::vector<std::vector<int>>* family, CycleRef* cycle) {
  // S0 triangle 0,1,2; S1 triangle 3,4,5; 4-cycle 6,7,8,9
  // paths: 0 -> 6 and 1 -> 7 of length t; 3 -> 8 and 4 -> 9 of length 2d-1-t
  SimpleGraph g(10);
  int next = 10;
  auto grow_path = [&](int from, int to, int len) {
    int cur = from;
    for (int k = 1; k < len; ++k) {
      g.adj.emplace_back();
      ++g.n;
      g.add_edge(cur, next);
      cur = next++;
    }
    g.add_edge(cur, to);
  };
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(6, 7);
  g.add_edge(7, 8);
  g.add_edge(8, 9);
  g.add_edge(6, 9);
  grow_path(0, 6, t);
  grow_path(1, 7, t);
  grow_path(3, 8, 2 * d - 1 - t);
  grow_path(4, 9, 2 * d - 1 - t);
  family->clear();
  family->push_back({0, 1, 2});
  family->push_back({3, 4, 5});
  if (third_set) {
    int base = g.n;
    g.adj.resize(g.n + 3);
    g.n += 3;
    g.add_edge(base, base + 1);
    g.add_edge(base + 1, base + 2);
    g.add_edge(base, base + 2);
    grow_path(2, base, 2 * d);
    family->push_back({base, base + 1, base + 2});
  }
  *cycle = CycleRef({6, 7, 8, 9});
  return g;
}

void crit_distcrit(Check& c) {
  int instances = 0;
  for (int d = 2; d <= 4; ++d)
    for (int t = 1; t <= d - 1; ++t)
      for (bool third : {false, true}) {
        std::vector<std::vector<int>> family;
        CycleRef cycle;
        SimpleGraph g = distcrit_instance(d, t, third, &family, &cycle);
        DistCritResult res = check_distcrit(g, family, cycle, 0, d);
        c.expect(res.verdict == DistCritResult::Verdict::s0_tight,
                 "constructed instance not judged tight");
        c.expect(res.t == t, "wrong tightness value");
        // independent distance audit
        std::vector<int> dist = bfs_distances(g.adj, family[0]);
        c.expect(dist[6] == t && dist[7] == t && dist[8] == t + 1 && dist[9] == t + 1,
                 "distance pattern differs from construction");
        c.expect(res.verdict != DistCritResult::Verdict::lemma_violation, "criterion violated");
        ++instances;
      }
  c.expect(instances >= 10, "fewer than 10 instances");
}

void crit_grotzsch_scan(Check& c) {
  ScanReport rep = scan_grotzsch({8, 1000, 30, 424242, 1});
  c.expect(rep.witnesses.empty(), "triangle-free witness found");
  c.expect(rep.colorable == rep.checks, "not all instances colorable");
  c.expect(rep.instances > 1000, "instance count unexpectedly small");
}

void crit_aksionov_scan(Check& c) {
  ScanReport rep = scan_aksionov({10, 1});
  c.expect(rep.witnesses.empty(), "one-triangle extension witness found");
  c.expect(rep.colorable == rep.checks, "some extension check failed");
  c.expect(rep.instances > 0 && rep.checks > rep.instances, "scan ran no facial checks");
}

void crit_havel_scan(Check& c) {
  ScanReport smoke = scan_havel({6, 0, 6, 0, 1, 1});
  bool saw_k4 = false;
  for (const ScanWitness& w : smoke.witnesses) {
    if (w.rot.size() != 4) continue;
    long deg_sum = 0;
    for (const auto& r : w.rot) deg_sum += static_cast<long>(r.size());
    if (deg_sum == 12) saw_k4 = true;
  }
  c.expect(saw_k4, "K4 missing from the delta=0 witness list");

  HavelSpec spec{12, 4, 0, 400, 987654, 1};
  ScanReport a = scan_havel(spec);
  ScanReport b = scan_havel(spec);
  std::ostringstream sa, sb;
  write_report(sa, a);
  write_report(sb, b);
  c.expect(sa.str() == sb.str(), "havel report not reproducible under a fixed seed");
  c.expect(a.instances == 400, "wrong instance count");
}

struct CriterionDef {
  const char* name;
  double limit_s;
  void (*body)(Check&);
};

const CriterionDef kCriteria[] = {
    {"prop4-c4-winding", 1.0, crit_prop4},
    {"prop3-face-winding-sum", 10.0, crit_wsum0},
    {"winding-algebra", 30.0, crit_winding_algebra},
    {"one-cuff-extension", 120.0, crit_one_cuff},
    {"two-cuff-extension", 300.0, crit_two_cuffs},
    {"oracle-equivalence", 300.0, crit_oracle_equivalence},
    {"grid-grower", 60.0, crit_grower},
    {"distance-criterion", 60.0, crit_distcrit},
    {"grotzsch-scan", 600.0, crit_grotzsch_scan},
    {"aksionov-scan", 600.0, crit_aksionov_scan},
    {"havel-scan", 600.0, crit_havel_scan},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) fail(Errc::invalid_argument, "criterion id out of range");
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult res;
  res.id = id;
  res.name = def.name;
  res.limit_seconds = def.limit_s;
  Check check;
  auto t0 = std::chrono::steady_clock::now();
  try {
    def.body(check);
  } catch (const std::exception& ex) {
    check.ok = false;
    check.detail << "exception: " << ex.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.pass = check.ok && res.seconds < def.limit_s;
  std::ostringstream d;
  d << check.cases << " checks";
  if (!check.ok) d << "; " << check.detail.str();
  if (check.ok && res.seconds >= def.limit_s) d << "; over time budget";
  res.detail = d.str();
  return res;
}

std::vector<std::string> named_suites() {
  return {"wC4", "wsum0", "preexten", "exten", "distcrit", "cylinder", "aksionov"};
}

CriterionResult run_named_suite(const std::string& name) {
  if (name == "wC4") return run_criterion(1);
  if (name == "wsum0") return run_criterion(2);
  if (name == "preexten") return run_criterion(4);
  if (name == "exten") return run_criterion(5);
  if (name == "distcrit") return run_criterion(8);
  if (name == "cylinder") return run_criterion(7);
  if (name == "aksionov") return run_criterion(10);
  fail(Errc::invalid_argument, "unknown verification suite: " + name);
}

}  // namespace plancol
