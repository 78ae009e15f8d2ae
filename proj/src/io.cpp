#include "plancol/io.hpp"

#include <fstream>
#include <sstream>

#include "plancol/errors.hpp"

namespace plancol {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return in;
}

}  // namespace

PlanarEmbedding read_planar_rot(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header != "planar-rot v1")
    fail(Errc::parse_error, "expected header 'planar-rot v1'");
  std::vector<std::vector<int>> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string id_tok;
    if (!(ls >> id_tok) || id_tok.back() != ':')
      fail(Errc::parse_error, "bad vertex line: " + line);
    int id = -1;
    try {
      id = std::stoi(id_tok.substr(0, id_tok.size() - 1));
    } catch (...) {
      fail(Errc::parse_error, "bad vertex id: " + id_tok);
    }
    if (id != static_cast<int>(table.size()))
      fail(Errc::parse_error, "vertex ids must be dense from 0");
    std::vector<int> nbrs;
    int v;
    while (ls >> v) nbrs.push_back(v);
    table.push_back(std::move(nbrs));
  }
  return build_embedding(table);
}

PlanarEmbedding read_planar_rot_file(const std::string& path) {
  auto in = open_input(path);
  return read_planar_rot(in);
}

void write_planar_rot(std::ostream& out, const PlanarEmbedding& e) {
  out << "planar-rot v1\n";
  for (int u = 0; u < e.vertex_count(); ++u) {
    out << u << ":";
    for (int v : e.rotations()[u]) out << ' ' << v;
    out << '\n';
  }
}

std::string planar_rot_string(const PlanarEmbedding& e) {
  std::ostringstream out;
  write_planar_rot(out, e);
  return out.str();
}

ThreeColoring read_coloring(std::istream& in, int n) {
  std::string header;
  if (!std::getline(in, header) || header != "coloring v1")
    fail(Errc::parse_error, "expected header 'coloring v1'");
  ThreeColoring phi(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int v, c;
    if (!(ls >> v >> c)) fail(Errc::parse_error, "bad coloring line: " + line);
    if (v < 0 || v >= n) fail(Errc::parse_error, "vertex id out of range: " + line);
    if (c < 1 || c > 3) fail(Errc::parse_error, "color out of range: " + line);
    phi.color[v] = c;
  }
  return phi;
}

ThreeColoring read_coloring_file(const std::string& path, int n) {
  auto in = open_input(path);
  return read_coloring(in, n);
}

void write_coloring(std::ostream& out, const ThreeColoring& phi) {
  out << "coloring v1\n";
  for (int v = 0; v < phi.size(); ++v)
    if (phi.color[v] != 0) out << v << ' ' << phi.color[v] << '\n';
}

std::string coloring_string(const ThreeColoring& phi) {
  std::ostringstream out;
  write_coloring(out, phi);
  return out.str();
}

}  // namespace plancol
