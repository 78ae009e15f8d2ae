#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "plancol/coloring.hpp"
#include "plancol/generate.hpp"

namespace plancol {

// A scan instance whose expected extension failed: held as the rotation
// table plus the fixed precoloring (possibly empty), both re-checkable on
// load.
struct ScanWitness {
  RotationTable rot;
  ThreeColoring precoloring;
  std::string context;
};

struct ScanReport {
  std::string mode;
  std::vector<std::pair<std::string, long>> params;  // emitted in this order
  long instances = 0;
  long checks = 0;     // extension checks performed
  long colorable = 0;  // checks that succeeded
  std::vector<ScanWitness> witnesses;
  double elapsed_s = 0;  // never serialized; reports stay byte-deterministic
};

// Triangle-free colorability sweep: exhaustive classes up to exhaustive_n
// plus random_count random instances with 5..random_n vertices.  Any witness
// contradicts a proved statement, so callers treat witnesses as failures.
struct GrotzschSpec {
  int exhaustive_n = 8;
  int random_count = 1000;
  int random_n = 30;
  unsigned long seed = 1;
  int jobs = 1;
};
ScanReport scan_grotzsch(const GrotzschSpec& spec);

// Precoloring-extension sweep over graphs with at most one triangle:
// the empty precoloring plus every proper coloring of every facial cycle of
// length at most five (length-5 faces sharing an edge with the triangle are
// excluded).  Witnesses are failures.
struct AksionovSpec {
  int n_max = 10;
  int jobs = 1;
};
ScanReport scan_aksionov(const AksionovSpec& spec);

// Colorability sweep over graphs whose triangles are pairwise at distance at
// least delta.  Non-colorable instances are recorded as witnesses and are
// first-class output, not failures.  exhaustive_n = 0 disables the
// exhaustive part; random_count = 0 the random part.
struct HavelSpec {
  int n_max = 12;
  int delta = 4;
  int exhaustive_n = 0;
  int random_count = 500;
  unsigned long seed = 1;
  int jobs = 1;
};
ScanReport scan_havel(const HavelSpec& spec);

// Line-oriented "key: value" report; deterministic for a fixed seed.
void write_report(std::ostream& out, const ScanReport& rep);

// JSON dump with the same fields (schema documented in the README).
void write_report_json(std::ostream& out, const ScanReport& rep);

// Writes witness k as <dir>/witness<k>.rot and .col.
void write_witness_files(const std::string& dir, const ScanReport& rep);

}  // namespace plancol
