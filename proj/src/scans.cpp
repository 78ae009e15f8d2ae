#include "plancol/scans.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "plancol/errors.hpp"
#include "plancol/io.hpp"
#include "plancol/oracle.hpp"
#include "plancol/planar.hpp"

namespace plancol {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SimpleGraph graph_of(const RotationTable& rot) {
  SimpleGraph g(static_cast<int>(rot.size()));
  for (int u = 0; u < g.n; ++u)
    for (int v : rot[u])
      if (v > u) g.add_edge(u, v);
  return g;
}

// Runs fn(i) for i in [0, count) across the given number of threads; the
// work must write only to its own index's slots.
void parallel_instances(int jobs, long count, const std::function<void(long)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  std::atomic<long> next{0};
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&]() {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& w : workers) w.join();
}

struct InstanceOutcome {
  long checks = 0;
  long colorable = 0;
  std::vector<ScanWitness> witnesses;
};

ScanReport merged_report(std::string mode,
                         std::vector<std::pair<std::string, long>> params,
                         const std::vector<InstanceOutcome>& outcomes) {
  ScanReport rep;
  rep.mode = std::move(mode);
  rep.params = std::move(params);
  rep.instances = static_cast<long>(outcomes.size());
  for (const auto& o : outcomes) {
    rep.checks += o.checks;
    rep.colorable += o.colorable;
    for (const auto& w : o.witnesses) rep.witnesses.push_back(w);
  }
  return rep;
}

}  // namespace

ScanReport scan_grotzsch(const GrotzschSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<RotationTable> instances;
  if (spec.exhaustive_n >= 3) {
    GenSpec gs{spec.exhaustive_n, GenConstraint::triangle_free, 0};
    for_each_plane_graph(gs, [&](const RotationTable& rot) {
      if (static_cast<int>(rot.size()) >= 3) instances.push_back(rot);
    });
  }
  std::mt19937_64 rng(spec.seed);
  for (int i = 0; i < spec.random_count; ++i) {
    int n = std::uniform_int_distribution<int>(5, std::max(5, spec.random_n))(rng);
    instances.push_back(gen_planar_random(n, GenConstraint::triangle_free, 0, 0.55, rng));
  }

  std::vector<InstanceOutcome> outcomes(instances.size());
  parallel_instances(spec.jobs, static_cast<long>(instances.size()), [&](long i) {
    const RotationTable& rot = instances[i];
    SimpleGraph g = graph_of(rot);
    outcomes[i].checks = 1;
    if (solve_3coloring({g, ThreeColoring(g.n)}))
      outcomes[i].colorable = 1;
    else
      outcomes[i].witnesses.push_back({rot, ThreeColoring(g.n), "triangle-free not colorable"});
  });

  ScanReport rep = merged_report(
      "grotzsch",
      {{"exhaustive_n", spec.exhaustive_n},
       {"random_count", spec.random_count},
       {"random_n", spec.random_n},
       {"seed", static_cast<long>(spec.seed)}},
      outcomes);
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

ScanReport scan_aksionov(const AksionovSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<RotationTable> instances;
  GenSpec gs{spec.n_max, GenConstraint::max_one_triangle, 0};
  for_each_plane_graph(gs, [&](const RotationTable& rot) {
    if (static_cast<int>(rot.size()) >= 3) instances.push_back(rot);
  });

  std::vector<InstanceOutcome> outcomes(instances.size());
  parallel_instances(spec.jobs, static_cast<long>(instances.size()), [&](long i) {
    const RotationTable& rot = instances[i];
    InstanceOutcome& out = outcomes[i];
    SimpleGraph g = graph_of(rot);

    // the null precoloring: colorability with at most one triangle
    out.checks += 1;
    if (solve_3coloring({g, ThreeColoring(g.n)}))
      out.colorable += 1;
    else
      out.witnesses.push_back({rot, ThreeColoring(g.n), "one-triangle graph not colorable"});

    PlanarEmbedding emb = build_embedding(rot);
    auto tris = find_triangles(emb);
    for (size_t f = 0; f < emb.faces().size(); ++f) {
      const FaceWalk& walk = emb.faces()[f];
      if (walk.length() > 5 || !walk.is_simple_cycle()) continue;
      std::vector<int> cyc = walk.vertices();
      if (walk.length() == 5 && tris.size() == 1) {
        // skip length-5 faces sharing an edge with the triangle
        bool shares = false;
        const auto& t = tris[0];
        for (int p = 0; p < 5 && !shares; ++p) {
          int a = cyc[p], b = cyc[(p + 1) % 5];
          for (int q = 0; q < 3 && !shares; ++q) {
            int x = t[q], y = t[(q + 1) % 3];
            if ((a == x && b == y) || (a == y && b == x)) shares = true;
          }
        }
        if (shares) continue;
      }
      for_each_proper_cycle_coloring(walk.length(), [&](const std::vector<Color>& colors) {
        ThreeColoring pre(g.n);
        for (int p = 0; p < walk.length(); ++p) pre.color[cyc[p]] = colors[p];
        out.checks += 1;
        if (solve_3coloring({g, pre}))
          out.colorable += 1;
        else
          out.witnesses.push_back({rot, pre, "facial precoloring does not extend"});
      });
    }
  });

  ScanReport rep = merged_report("aksionov", {{"n_max", spec.n_max}}, outcomes);
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

ScanReport scan_havel(const HavelSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<RotationTable> instances;
  if (spec.exhaustive_n >= 3) {
    GenSpec gs{spec.exhaustive_n, GenConstraint::min_triangle_distance, spec.delta};
    for_each_plane_graph(gs, [&](const RotationTable& rot) {
      if (static_cast<int>(rot.size()) >= 3) instances.push_back(rot);
    });
  }
  std::mt19937_64 rng(spec.seed);
  for (int i = 0; i < spec.random_count; ++i) {
    int n = std::uniform_int_distribution<int>(4, std::max(4, spec.n_max))(rng);
    instances.push_back(
        gen_planar_random(n, GenConstraint::min_triangle_distance, spec.delta, 0.6, rng));
  }

  std::vector<InstanceOutcome> outcomes(instances.size());
  parallel_instances(spec.jobs, static_cast<long>(instances.size()), [&](long i) {
    const RotationTable& rot = instances[i];
    SimpleGraph g = graph_of(rot);
    outcomes[i].checks = 1;
    if (solve_3coloring({g, ThreeColoring(g.n)}))
      outcomes[i].colorable = 1;
    else
      outcomes[i].witnesses.push_back(
          {rot, ThreeColoring(g.n), "triangles at pairwise distance >= delta, not colorable"});
  });

  ScanReport rep = merged_report(
      "havel",
      {{"n_max", spec.n_max},
       {"delta", spec.delta},
       {"exhaustive_n", spec.exhaustive_n},
       {"random_count", spec.random_count},
       {"seed", static_cast<long>(spec.seed)}},
      outcomes);
  rep.elapsed_s = seconds_since(t0);
  return rep;
}

void write_report(std::ostream& out, const ScanReport& rep) {
  out << "mode: " << rep.mode << '\n';
  for (const auto& [k, v] : rep.params) out << k << ": " << v << '\n';
  out << "instances: " << rep.instances << '\n';
  out << "checks: " << rep.checks << '\n';
  out << "colorable: " << rep.colorable << '\n';
  out << "witnesses: " << rep.witnesses.size() << '\n';
  for (size_t i = 0; i < rep.witnesses.size(); ++i) {
    const ScanWitness& w = rep.witnesses[i];
    out << "witness" << i << ": n=" << w.rot.size() << " precolored=" << w.precoloring.colored_count()
        << " " << w.context << '\n';
  }
}

void write_report_json(std::ostream& out, const ScanReport& rep) {
  nlohmann::json j;
  j["mode"] = rep.mode;
  for (const auto& [k, v] : rep.params) j["params"][k] = v;
  j["instances"] = rep.instances;
  j["checks"] = rep.checks;
  j["colorable"] = rep.colorable;
  j["witness_count"] = rep.witnesses.size();
  auto arr = nlohmann::json::array();
  for (const auto& w : rep.witnesses) {
    nlohmann::json jw;
    jw["n"] = w.rot.size();
    jw["context"] = w.context;
    jw["rotations"] = w.rot;
    std::vector<std::pair<int, int>> pre;
    for (int v = 0; v < w.precoloring.size(); ++v)
      if (w.precoloring.color[v] != 0) pre.emplace_back(v, w.precoloring.color[v]);
    jw["precoloring"] = pre;
    arr.push_back(std::move(jw));
  }
  j["witnesses"] = std::move(arr);
  out << j.dump(2) << '\n';
}

void write_witness_files(const std::string& dir, const ScanReport& rep) {
  for (size_t i = 0; i < rep.witnesses.size(); ++i) {
    const ScanWitness& w = rep.witnesses[i];
    const std::string base = dir + "/witness" + std::to_string(i);
    std::ofstream rot_out(base + ".rot");
    if (!rot_out) fail(Errc::io_error, "cannot write " + base + ".rot");
    write_planar_rot(rot_out, build_embedding(w.rot));
    std::ofstream col_out(base + ".col");
    if (!col_out) fail(Errc::io_error, "cannot write " + base + ".col");
    write_coloring(col_out, w.precoloring);
  }
}

}  // namespace plancol
