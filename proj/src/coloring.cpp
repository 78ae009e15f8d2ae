#include "plancol/coloring.hpp"

#include "plancol/errors.hpp"

namespace plancol {

bool ThreeColoring::is_total() const {
  for (Color c : color)
    if (c == 0) return false;
  return !color.empty();
}

int ThreeColoring::colored_count() const {
  int k = 0;
  for (Color c : color)
    if (c != 0) ++k;
  return k;
}

bool is_proper(const std::vector<std::vector<int>>& adj, const ThreeColoring& phi) {
  const int n = static_cast<int>(adj.size());
  if (phi.size() != n) return false;
  for (int u = 0; u < n; ++u) {
    Color cu = phi.color[u];
    if (cu < 0 || cu > 3) return false;
    if (cu == 0) continue;
    for (int v : adj[u])
      if (v > u && phi.color[v] == cu) return false;
  }
  return true;
}

bool is_proper_total(const std::vector<std::vector<int>>& adj, const ThreeColoring& phi) {
  return phi.is_total() && phi.size() == static_cast<int>(adj.size()) && is_proper(adj, phi);
}

void require_proper(const std::vector<std::vector<int>>& adj, const ThreeColoring& phi) {
  if (!is_proper(adj, phi)) fail(Errc::improper_coloring, "coloring has a monochromatic edge");
}

void require_proper_total(const std::vector<std::vector<int>>& adj, const ThreeColoring& phi) {
  if (phi.size() != static_cast<int>(adj.size()) || !phi.is_total())
    fail(Errc::partial_coloring, "coloring leaves vertices unset");
  require_proper(adj, phi);
}

void for_each_proper_cycle_coloring(int k,
                                    const std::function<void(const std::vector<Color>&)>& fn) {
  if (k < 3) fail(Errc::invalid_argument, "cycle length must be at least 3");
  std::vector<Color> cur(k, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      if (cur[k - 1] != cur[0]) fn(cur);
      return;
    }
    for (Color c = 1; c <= 3; ++c) {
      if (i > 0 && cur[i - 1] == c) continue;
      cur[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

ThreeColoring recolor_permuted(const ThreeColoring& phi, const std::array<Color, 4>& perm) {
  for (int c = 1; c <= 3; ++c)
    if (perm[c] < 1 || perm[c] > 3) fail(Errc::invalid_argument, "not a permutation of {1,2,3}");
  if (perm[1] == perm[2] || perm[1] == perm[3] || perm[2] == perm[3])
    fail(Errc::invalid_argument, "not a permutation of {1,2,3}");
  ThreeColoring out = phi;
  for (Color& c : out.color)
    if (c != 0) c = perm[c];
  return out;
}

}  // namespace plancol
