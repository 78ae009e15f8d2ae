#pragma once

#include <iosfwd>
#include <string>

#include "plancol/coloring.hpp"
#include "plancol/planar.hpp"

namespace plancol {

// Embedding text format `planar-rot v1`: a header line, then one line per
// vertex "<id>: <n1> <n2> ..." with neighbors in clockwise order, single
// spaces, newline-terminated.  Writing always emits the canonical rotation
// (each neighbor list starting at its minimum id), so write(read(x)) is
// byte-identical to write(x).
PlanarEmbedding read_planar_rot(std::istream& in);
PlanarEmbedding read_planar_rot_file(const std::string& path);
void write_planar_rot(std::ostream& out, const PlanarEmbedding& e);
std::string planar_rot_string(const PlanarEmbedding& e);

// Coloring text format `coloring v1`: a header line, then one line
// "<vertex> <color>" per colored vertex, sorted by vertex id.
ThreeColoring read_coloring(std::istream& in, int n);
ThreeColoring read_coloring_file(const std::string& path, int n);
void write_coloring(std::ostream& out, const ThreeColoring& phi);
std::string coloring_string(const ThreeColoring& phi);

}  // namespace plancol
