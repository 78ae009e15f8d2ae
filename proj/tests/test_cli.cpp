#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "doctest.h"
#include "plancol/cli.hpp"
#include "plancol/gridext.hpp"
#include "plancol/io.hpp"

using namespace plancol;

namespace {

// runs the CLI in-process, capturing stdout
int run_captured(const std::vector<std::string>& args, std::string* out) {
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  int status = plancol::run(args);
  std::cout.rdbuf(old);
  if (out) *out = captured.str();
  return status;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("plancol_test_" + name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli: missing input is a domain error") {
  std::string out;
  CHECK(run_captured({"wind", "--input", "missing.rot", "--coloring", "missing.col"}, &out) == 1);
}

TEST_CASE("cli: usage errors exit with 2") {
  std::string out;
  CHECK(run_captured({"frobnicate"}, &out) == 2);
  CHECK(run_captured({"grid-extend", "--r", "3"}, &out) == 2);  // missing required options
  CHECK(run_captured({}, &out) == 2);
}

TEST_CASE("cli: faces, wind and solve round trip") {
  CylGrid g = make_grid(4, 2);
  TempFile rot("cube.rot", planar_rot_string(g.emb));

  std::string faces_out;
  CHECK(run_captured({"faces", "--input", rot.path}, &faces_out) == 0);
  CHECK(faces_out.find("faces: 6") != std::string::npos);
  CHECK(faces_out.find("euler: 2") != std::string::npos);

  std::string solve_out;
  CHECK(run_captured({"solve", "--input", rot.path}, &solve_out) == 0);
  std::istringstream in(solve_out);
  ThreeColoring phi = read_coloring(in, g.emb.vertex_count());
  CHECK(is_proper_total(g.emb.adjacency(), phi));

  TempFile col("cube.col", coloring_string(phi));
  std::string wind_out;
  CHECK(run_captured({"wind", "--input", rot.path, "--coloring", col.path}, &wind_out) == 0);
  CHECK(wind_out.find("sum: 0") != std::string::npos);
}

TEST_CASE("cli: solve reports unsatisfiable with exit 1") {
  // K4 as a rotation table
  TempFile rot("k4.rot", "planar-rot v1\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n");
  std::string out;
  CHECK(run_captured({"solve", "--input", rot.path}, &out) == 1);
  CHECK(out == "unsatisfiable\n");
}

TEST_CASE("cli: grid-extend emits a valid deterministic coloring") {
  std::string out1, out2;
  CHECK(run_captured({"grid-extend", "--r", "3", "--mode", "one", "--cuff1", "1,2,3", "--v0",
                      "1", "--trace", "plancol_test_trace.log"},
                     &out1) == 0);
  CHECK(run_captured({"grid-extend", "--r", "3", "--mode", "one", "--cuff1", "1,2,3", "--v0",
                      "1", "--trace", "plancol_test_trace.log"},
                     &out2) == 0);
  CHECK(out1 == out2);
  CylGrid g = make_grid(3, 3);
  std::istringstream in(out1);
  ThreeColoring psi = read_coloring(in, 9);
  CHECK(is_proper_total(g.emb.adjacency(), psi));
  // the trace log lists one line per hoop
  std::ifstream tr("plancol_test_trace.log");
  int lines = 0;
  std::string line;
  while (std::getline(tr, line)) ++lines;
  CHECK(lines == 3);
  std::remove("plancol_test_trace.log");

  std::string err_out;
  CHECK(run_captured({"grid-extend", "--r", "6", "--mode", "one", "--cuff1", "1,2,3,1,2,3"},
                     &err_out) == 1);  // winding too large
}

TEST_CASE("cli: grid-find prints the hoop matrix") {
  CylGrid host = make_grid(4, 24);
  TempFile rot("host.rot", planar_rot_string(host.emb));
  std::string out;
  CHECK(run_captured({"grid-find", "--input", rot.path, "--source", "0,1,2,3", "--i0", "3",
                      "--window", "19"},
                     &out) == 0);
  CHECK(out.find("grid 4x9") != std::string::npos);
  CHECK(out.find("D1:") != std::string::npos);

  std::string witness_out;
  CHECK(run_captured({"grid-find", "--input", rot.path, "--source", "0,1,2,3", "--i0", "3",
                      "--window", "2"},
                     &witness_out) == 1);
  CHECK(witness_out.find("WindowExhausted") != std::string::npos);
}

TEST_CASE("cli: scan havel smoke") {
  std::string out1, out2;
  CHECK(run_captured({"scan", "--mode", "havel", "--n", "6", "--delta", "0", "--exhaustive-n",
                      "5", "--count", "0"},
                     &out1) == 0);
  CHECK(run_captured({"scan", "--mode", "havel", "--n", "6", "--delta", "0", "--exhaustive-n",
                      "5", "--count", "0"},
                     &out2) == 0);
  CHECK(out1 == out2);
  CHECK(out1.find("witnesses: 1") != std::string::npos);  // K4 at n <= 5
}

TEST_CASE("cli: verify-lemma wC4 passes") {
  std::string out;
  CHECK(run_captured({"verify-lemma", "wC4"}, &out) == 0);
  CHECK(out.find("PASS") != std::string::npos);
  CHECK(run_captured({"verify-lemma", "nonsense"}, &out) == 1);
}
