#include "plancol/gridext.hpp"

#include <algorithm>

#include "plancol/errors.hpp"

namespace plancol {

std::vector<int> CylGrid::hoop(int j) const {
  std::vector<int> ids(r);
  for (int i = 1; i <= r; ++i) ids[i - 1] = vertex(i, j);
  return ids;
}

int CylGrid::cap_face(int which) const {
  if (which == 1) return emb.face_of_dart(vertex(1, 1), vertex(2, 1));
  if (which == 2) return emb.face_of_dart(vertex(2, s), vertex(1, s));
  fail(Errc::invalid_argument, "cuff selector must be 1 or 2");
}

OrientedFacialCycle CylGrid::cuff_cycle(int which) const {
  std::vector<int> vs = hoop(which == 1 ? 1 : s);
  if (which == 2) std::reverse(vs.begin() + 1, vs.end());  // decreasing-i, starting at i=1
  return OrientedFacialCycle{std::move(vs), cap_face(which)};
}

CylGrid make_grid(int r, int s) {
  if (r < 3 || s < 1) fail(Errc::bad_dimensions, "need r >= 3, s >= 1");
  std::vector<std::vector<int>> rot(static_cast<size_t>(r) * s);
  auto id = [r](int i, int j) { return j * r + i; };  // 0-based here
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < r; ++i) {
      std::vector<int>& row = rot[id(i, j)];
      // clockwise: outward, previous on hoop, inward, next on hoop
      if (j + 1 < s) row.push_back(id(i, j + 1));
      row.push_back(id((i + r - 1) % r, j));
      if (j > 0) row.push_back(id(i, j - 1));
      row.push_back(id((i + 1) % r, j));
    }
  CylGrid g;
  g.r = r;
  g.s = s;
  g.emb = build_embedding(rot);
  return g;
}

int cuff_winding(const CylGrid& g, const ThreeColoring& phi, int which) {
  return winding_number(g.cuff_cycle(which), phi);
}

int Segmentation::block_len(int b) const {
  const int k = block_count();
  if (k == 1) return length;
  return (starts[(b + 1) % k] - starts[b] + length) % length;
}

bool Segmentation::contains(int b, int pos) const {
  int off = (pos - starts[b] + length) % length;
  return off < block_len(b);
}

void validate_segmentation(const std::vector<Color>& row, const Segmentation& seg) {
  const int r = static_cast<int>(row.size());
  if (seg.length != r || seg.starts.empty())
    fail(Errc::invalid_argument, "segmentation does not match row");
  for (int b = 0; b < seg.block_count(); ++b) {
    int st = seg.starts[b];
    if (st < 0 || st >= r || (b > 0 && st <= seg.starts[b - 1]))
      fail(Errc::invalid_argument, "segment starts not strictly increasing in range");
    int len = seg.block_len(b);
    if (len % 2 == 0) fail(Errc::invalid_argument, "segment has even cardinality");
    Color flag = row[st];
    if (row[(st + len - 1) % r] != flag)
      fail(Errc::invalid_argument, "segment ends do not share the flag color");
    for (int t = 0; t < len; ++t) {
      Color c = row[(st + t) % r];
      if (c != flag && c != next_color(flag))
        fail(Errc::invalid_argument, "segment interior leaves its two-color range");
    }
  }
}

Segmentation segmentation_of(const std::vector<Color>& hoop_colors) {
  const int r = static_cast<int>(hoop_colors.size());
  if (r < 3) fail(Errc::invalid_argument, "hoop needs at least 3 vertices");
  for (int i = 0; i < r; ++i) {
    Color a = hoop_colors[i], b = hoop_colors[(i + 1) % r];
    if (a < 1 || a > 3) fail(Errc::partial_coloring, "hoop vertex uncolored");
    if (a == b) fail(Errc::improper_coloring, "hoop coloring not proper");
  }
  Segmentation seg;
  seg.length = r;
  int i = 0;
  while (i < r) {
    seg.starts.push_back(i);
    if (i + 2 < r && hoop_colors[i + 1] == next_color(hoop_colors[i]) &&
        hoop_colors[i + 2] == hoop_colors[i])
      i += 3;
    else
      i += 1;
  }
  validate_segmentation(hoop_colors, seg);
  return seg;
}

namespace {

std::vector<Color> shifted(const std::vector<Color>& row, int dir) {
  std::vector<Color> out(row.size());
  for (size_t p = 0; p < row.size(); ++p)
    out[p] = dir > 0 ? next_color(row[p]) : prev_color(row[p]);
  return out;
}

void check_rows_compatible(const std::vector<Color>& below, const std::vector<Color>& above) {
  const int r = static_cast<int>(below.size());
  for (int p = 0; p < r; ++p) {
    if (above[p] == below[p]) fail(Errc::internal, "rung conflict between hoops");
    if (above[p] == above[(p + 1) % r]) fail(Errc::internal, "hoop coloring not proper");
  }
}

}  // namespace

PushResult push_hoop(const std::vector<Color>& row, const Segmentation& seg, int w_target) {
  validate_segmentation(row, seg);
  const int r = seg.length;
  const int k = seg.block_count();
  if ((k - r) % 2 != 0) fail(Errc::internal, "block count parity differs from hoop length");

  std::vector<Color> flags(k);
  for (int b = 0; b < k; ++b) flags[b] = row[seg.starts[b]];

  int triple = -1;
  if (k >= 4) {
    for (int a = 0; a < k; ++a)
      if (flags[a] == flags[(a + 2) % k]) {
        triple = a;
        break;
      }
    if (triple < 0 && std::abs(w_target) <= 1)
      fail(Errc::no_merge_available,
           "no merge triple although block count >= 4 and |winding| <= 1");
  }

  PushResult out;
  if (triple < 0) {
    out.row = shifted(row, +1);
    out.seg = seg;
    out.merged = false;
  } else {
    const int a = triple;
    const Color alpha = flags[a];
    const Color mid = flags[(a + 1) % k];
    const int dir = (mid == next_color(alpha)) ? +1 : -1;
    // vertices of the middle segment colored alpha+2 break the plain shift;
    // they are redirected to keep the image inside two colors
    const Color override_from = next_color(next_color(alpha));
    const Color override_to = dir > 0 ? next_color(alpha) : alpha;
    out.row = shifted(row, dir);
    const int mid_b = (a + 1) % k;
    for (int t = 0; t < seg.block_len(mid_b); ++t) {
      int pos = (seg.starts[mid_b] + t) % r;
      if (row[pos] == override_from) out.row[pos] = override_to;
    }
    out.seg.length = r;
    for (int b = 0; b < k; ++b)
      if (b != (a + 1) % k && b != (a + 2) % k) out.seg.starts.push_back(seg.starts[b]);
    std::sort(out.seg.starts.begin(), out.seg.starts.end());
    out.merged = true;
  }
  check_rows_compatible(row, out.row);
  validate_segmentation(out.row, out.seg);
  return out;
}

namespace {

int lemma_height(int r) { return (r + 3 + 1) / 2; }  // ceil((r+3)/2)

// Core machinery shared by both extension entry points: advances a starting
// row across h rows so the last row minus position v0_pos is two-colored.
// Requires h >= ceil((r+3)/2) and |w_first| <= 1; rows are indexed 0..h-1.
std::vector<std::vector<Color>> extend_rows(const std::vector<Color>& first_row, int h,
                                            int v0_pos, int w_first,
                                            std::vector<HoopTrace>* trace,
                                            int trace_base, int trace_dir) {
  const int r = static_cast<int>(first_row.size());
  if (h < lemma_height(r)) fail(Errc::internal, "row budget below the required height");

  std::vector<std::vector<Color>> rows;
  rows.reserve(h);
  rows.push_back(first_row);
  Segmentation seg = segmentation_of(first_row);

  auto record = [&](const Segmentation& sg, bool merged) {
    if (!trace) return;
    const auto& row = rows.back();
    HoopTrace t;
    t.hoop = trace_base + trace_dir * (static_cast<int>(rows.size()) - 1);
    for (int b = 0; b < sg.block_count(); ++b) {
      t.block_lens.push_back(sg.block_len(b));
      t.flags.push_back(row[sg.starts[b]]);
    }
    t.winding = winding_of_colors(row);
    t.merged = merged;
    trace->push_back(t);
  };
  record(seg, false);

  for (int step = 0; step < h - 3; ++step) {
    PushResult pr = push_hoop(rows.back(), seg, w_first);
    rows.push_back(std::move(pr.row));
    seg = std::move(pr.seg);
    record(seg, pr.merged);
  }

  const int k = seg.block_count();
  const bool odd = (r % 2 != 0);
  if ((odd && k != 3) || (!odd && k != 2))
    fail(Errc::internal, "advance did not reach the expected block count");
  const std::vector<Color>& base = rows.back();

  std::vector<Color> row_a(r), row_b(r);  // the final two rows
  if (odd) {
    // three blocks: X3 holds the column of v0, X1 follows it, X2 follows X1
    int j3 = 0;
    while (!seg.contains(j3, v0_pos)) ++j3;
    const int b3 = j3, b1 = (j3 + 1) % 3, b2 = (j3 + 2) % 3;
    // work in standard colors where flag(X_i) = i
    std::array<Color, 4> pi = {0, base[seg.starts[b1]], base[seg.starts[b2]],
                               base[seg.starts[b3]]};
    std::array<Color, 4> pi_inv = {0, 0, 0, 0};
    for (Color c = 1; c <= 3; ++c) pi_inv[pi[c]] = c;

    const int v1 = v0_pos;
    const int x3_start = seg.starts[b3];
    const int x3_len = seg.block_len(b3);
    const int len_prime = (v1 - x3_start + r) % r;     // X3' side, toward X2
    const int len_second = x3_len - 1 - len_prime;     // X3'' side, toward X1
    if (len_prime % 2 != len_second % 2) fail(Errc::internal, "split parities differ");
    const Color a = (len_prime % 2 == 0) ? 1 : 3;
    const Color b = (len_prime % 2 == 0) ? 3 : 1;

    // proper 2-coloring (A,B) of the hoop path minus v1, ends of X1 in A
    const int x1_off = (seg.starts[b1] - (v1 + 1) % r + r) % r;
    auto side = [&](int pos) {  // 0 = A, 1 = B
      int off = (pos - (v1 + 1) % r + r) % r;
      return ((off - x1_off) % 2 + 2) % 2;
    };
    auto in_second = [&](int pos) {
      int off = (pos - (v1 + 1) % r + r) % r;
      return off < len_second;  // X3'' starts right after v1, toward X1
    };
    for (int p = 0; p < r; ++p) {
      if (p == v1) {
        row_a[p] = a;
      } else if (side(p) == 0) {
        row_a[p] = 2;
      } else {
        row_a[p] = in_second(p) ? 1 : 3;
      }
      if (p == v1)
        row_b[p] = b;
      else
        row_b[p] = (side(p) == 0) ? a : 2;
    }
    for (int p = 0; p < r; ++p) {
      row_a[p] = pi[row_a[p]];
      row_b[p] = pi[row_b[p]];
    }
  } else {
    // two blocks: color the next hoop by position parity with the flag pair
    // of the first block, then rotate once more for a two-colored last hoop
    const Color alpha = base[seg.starts[0]];
    const Color beta = next_color(alpha);
    for (int p = 0; p < r; ++p) {
      int off = (p - seg.starts[0] + r) % r;
      row_a[p] = (off % 2 == 0) ? beta : alpha;
      row_b[p] = next_color(row_a[p]);
    }
  }

  check_rows_compatible(base, row_a);
  check_rows_compatible(row_a, row_b);
  rows.push_back(std::move(row_a));
  record(segmentation_of(rows.back()), false);
  rows.push_back(std::move(row_b));
  record(segmentation_of(rows.back()), false);

  // last row minus v0 must use at most two colors
  {
    std::array<char, 4> used = {0, 0, 0, 0};
    for (int p = 0; p < r; ++p)
      if (p != v0_pos) used[rows.back()[p]] = 1;
    if (used[1] + used[2] + used[3] > 2)
      fail(Errc::internal, "far hoop minus v0 uses three colors");
  }
  return rows;
}

// Reads the colors of one hoop out of a grid coloring, increasing-i order.
std::vector<Color> hoop_colors(const CylGrid& g, const ThreeColoring& phi, int j) {
  std::vector<Color> row(g.r);
  for (int i = 1; i <= g.r; ++i) row[i - 1] = phi.color[g.vertex(i, j)];
  return row;
}

void require_colors_exactly_on(const CylGrid& g, const ThreeColoring& phi,
                               const std::vector<int>& hoops) {
  if (phi.size() != g.r * g.s) fail(Errc::invalid_argument, "coloring size does not match grid");
  std::vector<char> allowed(g.r * g.s, 0);
  for (int j : hoops)
    for (int id : g.hoop(j)) allowed[id] = 1;
  for (int v = 0; v < phi.size(); ++v) {
    if (allowed[v] && phi.color[v] == 0)
      fail(Errc::partial_coloring, "cuff vertex " + std::to_string(v) + " uncolored");
    if (!allowed[v] && phi.color[v] != 0)
      fail(Errc::invalid_argument, "coloring assigns vertices outside the cuffs");
  }
}

void check_hoop_proper(const std::vector<Color>& row) {
  const int r = static_cast<int>(row.size());
  for (int p = 0; p < r; ++p)
    if (row[p] == row[(p + 1) % r]) fail(Errc::improper_coloring, "cuff coloring not proper");
}

}  // namespace

ThreeColoring extend_one_cuff(const CylGrid& g, const ThreeColoring& phi, int v0_pos,
                              std::vector<HoopTrace>* trace) {
  if (g.s != lemma_height(g.r))
    fail(Errc::bad_dimensions, "one-cuff extension needs height ceil((r+3)/2)");
  if (v0_pos < 1 || v0_pos > g.r) fail(Errc::invalid_argument, "v0 position out of range");
  require_colors_exactly_on(g, phi, {1});
  std::vector<Color> first = hoop_colors(g, phi, 1);
  check_hoop_proper(first);
  const int w = winding_of_colors(first);  // cap orientation of C1 is increasing-i
  if (std::abs(w) > 1) fail(Errc::winding_too_large, "|winding| of C1 exceeds 1");

  auto rows = extend_rows(first, g.s, v0_pos - 1, w, trace, 1, +1);

  ThreeColoring out(g.r * g.s);
  for (int j = 1; j <= g.s; ++j)
    for (int i = 1; i <= g.r; ++i) out.color[g.vertex(i, j)] = rows[j - 1][i - 1];
  require_proper_total(g.emb.adjacency(), out);
  for (int i = 1; i <= g.r; ++i)
    if (out.color[g.vertex(i, 1)] != phi.color[g.vertex(i, 1)])
      fail(Errc::internal, "extension modified the cuff coloring");
  return out;
}

ThreeColoring extend_two_cuffs(const CylGrid& g, const ThreeColoring& phi,
                               std::vector<HoopTrace>* trace) {
  const int r = g.r;
  if (g.s != r + 5) fail(Errc::bad_dimensions, "two-cuff extension needs height r+5");
  require_colors_exactly_on(g, phi, {1, g.s});
  std::vector<Color> row1 = hoop_colors(g, phi, 1);
  std::vector<Color> row2 = hoop_colors(g, phi, g.s);
  check_hoop_proper(row1);
  check_hoop_proper(row2);
  const int w1 = winding_of_colors(row1);
  std::vector<Color> row2_rev(row2.rbegin(), row2.rend());
  const int w2 = winding_of_colors(row2_rev);  // cap orientation of C2 is decreasing-i
  if (std::abs(w1) > 1) fail(Errc::winding_too_large, "|winding| of C1 exceeds 1");
  if (w1 + w2 != 0) fail(Errc::winding_mismatch, "cuff windings do not cancel");

  const int s_mid = lemma_height(r);
  const int h_top = r + 4 - s_mid;  // hoops r+5 down to s_mid+2
  const int u_pos = 0;              // u = (1, s_mid), v = (1, s_mid+2): nearest pair

  auto bottom = extend_rows(row1, s_mid, u_pos, w1, trace, 1, +1);
  auto top = extend_rows(row2, h_top, u_pos, w2, trace, r + 5, -1);

  // glue hoop s_mid+1 between the two already-colored hoops
  const std::vector<Color>& below = bottom[s_mid - 1];
  const std::vector<Color>& above = top[h_top - 1];
  std::vector<unsigned> lists(r);
  for (int p = 0; p < r; ++p) {
    unsigned m = 0b1110u;
    m &= ~(1u << below[p]);
    m &= ~(1u << above[p]);
    lists[p] = m;
  }
  std::vector<Color> mid(r, 0);
  bool glued = false;
  for (Color c0 = 1; c0 <= 3 && !glued; ++c0) {
    if (!(lists[0] >> c0 & 1u)) continue;
    std::vector<unsigned> feas(r, 0);
    feas[0] = 1u << c0;
    for (int p = 1; p < r; ++p) {
      for (Color c = 1; c <= 3; ++c)
        if ((lists[p] >> c & 1u) && (feas[p - 1] & ~(1u << c) & 0b1110u)) feas[p] |= 1u << c;
      if (!feas[p]) break;
    }
    for (Color cl = 1; cl <= 3 && !glued; ++cl) {
      if (cl == c0 || !(feas[r - 1] >> cl & 1u)) continue;
      mid[r - 1] = cl;
      for (int p = r - 2; p >= 1; --p)
        for (Color c = 1; c <= 3; ++c)
          if ((feas[p] >> c & 1u) && c != mid[p + 1]) {
            mid[p] = c;
            break;
          }
      mid[0] = c0;
      glued = true;
    }
  }
  if (!glued) fail(Errc::internal, "middle hoop admits no proper coloring");

  ThreeColoring out(r * g.s);
  for (int j = 1; j <= s_mid; ++j)
    for (int i = 1; i <= r; ++i) out.color[g.vertex(i, j)] = bottom[j - 1][i - 1];
  for (int i = 1; i <= r; ++i) out.color[g.vertex(i, s_mid + 1)] = mid[i - 1];
  for (int t = 0; t < h_top; ++t)
    for (int i = 1; i <= r; ++i) out.color[g.vertex(i, r + 5 - t)] = top[t][i - 1];
  require_proper_total(g.emb.adjacency(), out);
  for (int i = 1; i <= r; ++i) {
    if (out.color[g.vertex(i, 1)] != phi.color[g.vertex(i, 1)] ||
        out.color[g.vertex(i, g.s)] != phi.color[g.vertex(i, g.s)])
      fail(Errc::internal, "extension modified a cuff coloring");
  }
  return out;
}

}  // namespace plancol
