#include "plancol/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "plancol/errors.hpp"
#include "plancol/generate.hpp"
#include "plancol/gridext.hpp"
#include "plancol/io.hpp"
#include "plancol/oracle.hpp"
#include "plancol/scans.hpp"
#include "plancol/tightgeo.hpp"
#include "plancol/verify.hpp"
#include "plancol/winding.hpp"

namespace plancol {

namespace {

// Numeric parameters of one invocation, validated before dispatch.
struct CommandConfig {
  std::string input, coloring, output, trace_path, json_path, witness_dir;
  std::string mode, cuff1, cuff2, suite, source;
  int r = 0, n = 0, delta = 0, v0 = 1, i0 = -1, window = -1, count = -1;
  int exhaustive_n = -1;
  unsigned long seed = 1;
  int jobs = 0;
  int verbosity = 0;
};

int default_jobs() {
  if (const char* env = std::getenv("PLANCOL_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

std::vector<Color> parse_colors(const std::string& tokens, int expect) {
  std::vector<Color> out;
  std::istringstream ss(tokens);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok != "1" && tok != "2" && tok != "3")
      fail(Errc::parse_error, "colors are comma-separated 1/2/3 tokens");
    out.push_back(tok[0] - '0');
  }
  if (expect > 0 && static_cast<int>(out.size()) != expect)
    fail(Errc::parse_error, "expected " + std::to_string(expect) + " colors");
  return out;
}

std::vector<int> parse_ints(const std::string& tokens) {
  std::vector<int> out;
  std::istringstream ss(tokens);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stoi(tok));
  return out;
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) fail(Errc::io_error, "cannot write " + path);
  return file;
}

int cmd_faces(const CommandConfig& cfg) {
  PlanarEmbedding e = read_planar_rot_file(cfg.input);
  const auto& faces = trace_faces(e);
  long total = 0;
  for (size_t f = 0; f < faces.size(); ++f) {
    std::cout << "face " << f << ": length " << faces[f].length() << ":";
    for (const Dart& d : faces[f].darts) std::cout << ' ' << d.first;
    std::cout << '\n';
    total += faces[f].length();
  }
  std::cout << "faces: " << faces.size() << '\n'
            << "edges: " << e.edge_count() << '\n'
            << "euler: " << e.vertex_count() - e.edge_count() + static_cast<long>(faces.size())
            << '\n';
  if (total != 2 * e.edge_count()) fail(Errc::internal, "face lengths do not sum to 2|E|");
  return 0;
}

int cmd_wind(const CommandConfig& cfg) {
  PlanarEmbedding e = read_planar_rot_file(cfg.input);
  ThreeColoring phi = read_coloring_file(cfg.coloring, e.vertex_count());
  int sum = 0;
  for (size_t f = 0; f < e.faces().size(); ++f) {
    int w = winding_number(oriented_cycle_of_face(e, static_cast<int>(f)), phi);
    std::cout << "face " << f << ": winding " << w << '\n';
    sum += w;
  }
  std::cout << "sum: " << sum << '\n';
  return 0;
}

int cmd_grid_extend(const CommandConfig& cfg) {
  if (cfg.r < 3) fail(Errc::bad_dimensions, "need --r >= 3");
  std::vector<HoopTrace> trace;
  ThreeColoring psi;
  CylGrid g;
  if (cfg.mode == "one") {
    g = make_grid(cfg.r, (cfg.r + 4) / 2);
    std::vector<Color> c1 = parse_colors(cfg.cuff1, cfg.r);
    if (cfg.v0 < 1 || cfg.v0 > cfg.r) fail(Errc::invalid_argument, "--v0 out of range");
    ThreeColoring phi(g.r * g.s);
    for (int i = 1; i <= g.r; ++i) phi.color[g.vertex(i, 1)] = c1[i - 1];
    psi = extend_one_cuff(g, phi, cfg.v0, &trace);
  } else if (cfg.mode == "two") {
    if (cfg.cuff2.empty()) fail(Errc::invalid_argument, "--mode two needs --cuff2");
    g = make_grid(cfg.r, cfg.r + 5);
    std::vector<Color> c1 = parse_colors(cfg.cuff1, cfg.r);
    std::vector<Color> c2 = parse_colors(cfg.cuff2, cfg.r);
    ThreeColoring phi(g.r * g.s);
    for (int i = 1; i <= g.r; ++i) {
      phi.color[g.vertex(i, 1)] = c1[i - 1];
      phi.color[g.vertex(i, g.s)] = c2[i - 1];
    }
    psi = extend_two_cuffs(g, phi, &trace);
  } else {
    fail(Errc::invalid_argument, "--mode must be one or two");
  }
  std::ofstream out_file;
  std::ostream& out = open_or_stdout(cfg.output, out_file);
  write_coloring(out, psi);

  std::ofstream trace_file;
  std::ostream& tr = cfg.trace_path.empty() ? std::cerr : open_or_stdout(cfg.trace_path, trace_file);
  for (const HoopTrace& t : trace) {
    tr << "hoop " << t.hoop << ": blocks=" << t.block_lens.size() << " sizes=";
    for (size_t b = 0; b < t.block_lens.size(); ++b)
      tr << (b ? "," : "") << t.block_lens[b];
    tr << " flags=";
    for (size_t b = 0; b < t.flags.size(); ++b) tr << (b ? "," : "") << t.flags[b];
    tr << " winding=" << t.winding << (t.merged ? " merged" : "") << '\n';
  }
  return 0;
}

int cmd_grid_find(const CommandConfig& cfg) {
  PlanarEmbedding e = read_planar_rot_file(cfg.input);
  std::vector<int> sources = parse_ints(cfg.source);
  BfsLayers layers = bfs_layers(e, sources);
  std::optional<CycleRef> c0;
  if (cfg.i0 >= 0) {
    c0 = find_equidistant_cycle(e, layers, cfg.i0);
  } else {
    for (int i = 1; i < e.vertex_count() && !c0; ++i) c0 = find_equidistant_cycle(e, layers, i);
  }
  if (!c0) {
    std::cout << "no equidistant cycle found\n";
    return 1;
  }
  int window = cfg.window >= 0 ? cfg.window : lemma_window(c0->length());
  GrowResult res = grow_cylindrical_grid(e, layers, *c0, window);
  if (std::holds_alternative<FailureWitness>(res)) {
    const FailureWitness& w = std::get<FailureWitness>(res);
    std::cout << "witness: " << failure_reason_name(w.reason) << " face=" << w.face_id
              << " distance=" << w.distance << " (" << w.detail << ")\n";
    return 1;
  }
  const GrownGrid& grid = std::get<GrownGrid>(res);
  std::cout << "grid " << grid.r << "x" << grid.hoops.size() << " at distance "
            << grid.start_distance << " restarts " << grid.restarts << '\n';
  for (size_t j = 0; j < grid.hoops.size(); ++j) {
    std::cout << "D" << (j + 1) << ":";
    for (int v : grid.hoops[j]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return 0;
}

int cmd_solve(const CommandConfig& cfg) {
  PlanarEmbedding e = read_planar_rot_file(cfg.input);
  SimpleGraph g = e.graph();
  ThreeColoring pre(g.n);
  if (!cfg.coloring.empty()) pre = read_coloring_file(cfg.coloring, g.n);
  auto res = solve_3coloring({g, pre});
  if (!res) {
    std::cout << "unsatisfiable\n";
    return 1;
  }
  std::ofstream out_file;
  std::ostream& out = open_or_stdout(cfg.output, out_file);
  write_coloring(out, *res);
  return 0;
}

int cmd_scan(const CommandConfig& cfg) {
  ScanReport rep;
  const int jobs = cfg.jobs > 0 ? cfg.jobs : default_jobs();
  if (cfg.mode == "grotzsch") {
    GrotzschSpec spec;
    if (cfg.exhaustive_n >= 0) spec.exhaustive_n = cfg.exhaustive_n;
    if (cfg.count >= 0) spec.random_count = cfg.count;
    if (cfg.n > 0) spec.random_n = cfg.n;
    spec.seed = cfg.seed;
    spec.jobs = jobs;
    rep = scan_grotzsch(spec);
  } else if (cfg.mode == "aksionov") {
    AksionovSpec spec;
    if (cfg.n > 0) spec.n_max = cfg.n;
    spec.jobs = jobs;
    rep = scan_aksionov(spec);
  } else if (cfg.mode == "havel") {
    HavelSpec spec;
    if (cfg.n > 0) spec.n_max = cfg.n;
    spec.delta = cfg.delta;
    spec.exhaustive_n = cfg.exhaustive_n >= 0 ? cfg.exhaustive_n : 0;
    spec.random_count = cfg.count >= 0 ? cfg.count : (spec.exhaustive_n > 0 ? 0 : 500);
    spec.seed = cfg.seed;
    spec.jobs = jobs;
    rep = scan_havel(spec);
  } else {
    fail(Errc::invalid_argument, "--mode must be grotzsch, aksionov or havel");
  }
  write_report(std::cout, rep);
  std::cerr << "elapsed_s: " << rep.elapsed_s << '\n';
  if (!cfg.json_path.empty()) {
    std::ofstream jf(cfg.json_path);
    if (!jf) fail(Errc::io_error, "cannot write " + cfg.json_path);
    write_report_json(jf, rep);
  }
  if (!cfg.witness_dir.empty()) write_witness_files(cfg.witness_dir, rep);
  // witnesses contradict proved statements except in havel mode
  if (cfg.mode != "havel" && !rep.witnesses.empty()) return 1;
  return 0;
}

int cmd_verify(const CommandConfig& cfg) {
  CriterionResult res = run_named_suite(cfg.suite);
  std::cout << (res.pass ? "PASS" : "FAIL") << ' ' << res.name << " (" << res.detail << ")\n";
  std::cerr << "elapsed_s: " << res.seconds << '\n';
  return res.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"plancol: plane-graph 3-coloring machinery"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto* faces = app.add_subcommand("faces", "trace the faces of an embedding");
  faces->add_option("--input", cfg.input, "planar-rot v1 file")->required();

  auto* wind = app.add_subcommand("wind", "winding numbers of all face boundaries");
  wind->add_option("--input", cfg.input, "planar-rot v1 file")->required();
  wind->add_option("--coloring", cfg.coloring, "coloring v1 file")->required();

  auto* gext = app.add_subcommand("grid-extend", "extend cuff colorings across a cylindrical grid");
  gext->add_option("--r", cfg.r, "hoop length")->required();
  gext->add_option("--mode", cfg.mode, "one | two")->required();
  gext->add_option("--cuff1", cfg.cuff1,
                   "comma-separated colors (1/2/3) in cuff cyclic order, starting "
                   "at the canonical first vertex")
      ->required();
  gext->add_option("--cuff2", cfg.cuff2, "second cuff colors, canonical order");
  gext->add_option("--v0", cfg.v0, "1-based hoop position of the exempted far-cuff vertex");
  gext->add_option("--output", cfg.output, "coloring output path (default stdout)");
  gext->add_option("--trace", cfg.trace_path, "per-hoop trace path (default stderr)");

  auto* gfind = app.add_subcommand("grid-find", "grow a cylindrical grid from BFS layers");
  gfind->add_option("--input", cfg.input, "planar-rot v1 file")->required();
  gfind->add_option("--source", cfg.source, "comma-separated source vertex ids")->required();
  gfind->add_option("--i0", cfg.i0, "layer of the starting cycle (default: first with a cycle)");
  gfind->add_option("--window", cfg.window, "S-tight window length (default: formula bound)");

  auto* solve = app.add_subcommand("solve", "exact precoloring-extension 3-coloring");
  solve->add_option("--input", cfg.input, "planar-rot v1 file")->required();
  solve->add_option("--precolor", cfg.coloring, "coloring v1 file with the fixed part");
  solve->add_option("--output", cfg.output, "coloring output path (default stdout)");

  auto* scan = app.add_subcommand("scan", "colorability scans over generated plane graphs");
  scan->add_option("--mode", cfg.mode, "grotzsch | aksionov | havel")->required();
  scan->add_option("--n", cfg.n, "size bound");
  scan->add_option("--delta", cfg.delta, "pairwise triangle distance (havel)");
  scan->add_option("--seed", cfg.seed, "random seed");
  scan->add_option("--count", cfg.count, "random instance count");
  scan->add_option("--exhaustive-n", cfg.exhaustive_n, "exhaustive enumeration bound");
  scan->add_option("--jobs", cfg.jobs, "worker threads (default $PLANCOL_JOBS or 1)");
  scan->add_option("--json", cfg.json_path, "write a JSON report here");
  scan->add_option("--witness-dir", cfg.witness_dir, "write witness .rot/.col files here");

  auto* verify = app.add_subcommand("verify-lemma", "run a named verification suite");
  verify
      ->add_option("--suite,suite", cfg.suite,
                   "wC4 | wsum0 | preexten | exten | distcrit | cylinder | aksionov")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (*faces) return cmd_faces(cfg);
    if (*wind) return cmd_wind(cfg);
    if (*gext) return cmd_grid_extend(cfg);
    if (*gfind) return cmd_grid_find(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*scan) return cmd_scan(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace plancol
