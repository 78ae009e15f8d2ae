#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace plancol {

// Colors are 1, 2, 3; 0 marks an uncolored vertex.  Color arithmetic is
// cyclic over {1,2,3} with 3+1 = 1.
using Color = int;

inline Color next_color(Color c) { return c % 3 + 1; }
inline Color prev_color(Color c) { return (c + 1) % 3 + 1; }

// Partial or total vertex coloring.
struct ThreeColoring {
  std::vector<Color> color;  // size n, 0 = unset

  ThreeColoring() = default;
  explicit ThreeColoring(int n) : color(n, 0) {}

  int size() const { return static_cast<int>(color.size()); }
  bool is_total() const;
  int colored_count() const;
};

// The shared properness validator: every coloring the library hands out goes
// through here.  A coloring is proper on a graph when no edge joins two
// equal nonzero colors; "total" additionally requires every vertex colored.
bool is_proper(const std::vector<std::vector<int>>& adj, const ThreeColoring& phi);
bool is_proper_total(const std::vector<std::vector<int>>& adj, const ThreeColoring& phi);

// Throwing forms (Errc::improper_coloring / Errc::partial_coloring).
void require_proper(const std::vector<std::vector<int>>& adj, const ThreeColoring& phi);
void require_proper_total(const std::vector<std::vector<int>>& adj, const ThreeColoring& phi);

// Composition with a permutation of {1,2,3}; perm[c] is the new color of c
// (perm[0] ignored).  Uncolored vertices stay uncolored.
ThreeColoring recolor_permuted(const ThreeColoring& phi, const std::array<Color, 4>& perm);

// All proper 3-colorings of a k-cycle, as color sequences in cycle order,
// in lexicographic order.  There are 2^k + 2*(-1)^k of them.
void for_each_proper_cycle_coloring(int k,
                                    const std::function<void(const std::vector<Color>&)>& fn);

}  // namespace plancol
