#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "triangulation.hpp"

namespace annulus {

// Skew-symmetrizable exchange matrix attached to an ordinary triangulation;
// rows and columns are indexed by the arcs in canonical order.
struct BMatrix {
  std::vector<std::vector<int>> m;

  int size() const { return static_cast<int>(m.size()); }
  auto operator<=>(const BMatrix&) const = default;
};

namespace detail {

// Chord of the unrolled polygon, as a pair of polygon vertex ids.
struct Chord {
  int a, b;
};

}  // namespace detail

// B-matrix of an ordinary triangulation, computed by cutting the annulus
// along the bridging arc `gamma` and unrolling to a (p+q+2)-gon: vertices
// 0..p run along the lower boundary, p+1..p+q+1 back along the upper one,
// and the two copies of gamma close the polygon. Every other arc of t has a
// unique lift to a diagonal; the oriented triangles of the resulting polygon
// triangulation contribute the matrix entries. The result does not depend on
// which bridging arc of t is cut.
inline BMatrix quiver_of(const Triangulation& t, const Arc& gamma) {
  const Surface& s = t.surface();
  if (t.strictly_asymptotic())
    throw std::invalid_argument("quiver undefined for strictly asymptotic triangulation");
  if (s.p < 1 || s.q < 1)
    throw std::invalid_argument("quiver requires marked points on both boundaries");
  if (!is_bridging(gamma) || !t.contains(gamma))
    throw std::invalid_argument("cut arc must be a bridging arc of the triangulation: " +
                                format_arc(gamma));

  const auto& g = std::get<Bridging>(gamma);
  const int p = s.p, q = s.q;
  const int n = static_cast<int>(t.arcs().size());
  // Positions in integer units: lower coordinates scaled by p, upper by q.
  const int l0 = g.lower;
  const int uhi = g.upper + (g.winding + 1) * q;
  const int ulo = uhi - q;
  const int nv = p + q + 2;
  auto upper_id = [&](int pos) { return p + 1 + (uhi - pos); };

  std::map<std::pair<int, int>, int> side_to_arc;  // normalized vertex pair -> arc index
  auto put_side = [&](int a, int b, int idx) {
    if (a > b) std::swap(a, b);
    side_to_arc[{a, b}] = idx;
  };
  for (int j = 0; j < p; ++j) put_side(j, j + 1, -1);
  for (int j = 0; j < q; ++j) put_side(p + 1 + j, p + 2 + j, -1);

  int gamma_idx = -1;
  for (int i = 0; i < n; ++i)
    if (t.arcs()[i] == gamma) gamma_idx = i;
  put_side(p, p + 1, gamma_idx);
  put_side(p + q + 1, 0, gamma_idx);

  for (int i = 0; i < n; ++i) {
    const Arc& a = t.arcs()[i];
    if (a == gamma) continue;
    std::vector<detail::Chord> lifts;
    if (const auto* pe = std::get_if<Peripheral>(&a)) {
      if (pe->boundary == Boundary::Lower) {
        for (int k = -2; k <= 2; ++k) {
          int e1 = pe->base + k * p, e2 = e1 + pe->span;
          if (l0 <= e1 && e2 <= l0 + p) lifts.push_back({e1 - l0, e2 - l0});
        }
      } else {
        for (int k = g.winding - 2; k <= g.winding + 2; ++k) {
          int e1 = pe->base + k * q, e2 = e1 + pe->span;
          if (ulo <= e1 && e2 <= uhi) lifts.push_back({upper_id(e2), upper_id(e1)});
        }
      }
    } else {
      const auto& b = std::get<Bridging>(a);
      for (int k = -2; k <= 2; ++k) {
        int el = b.lower + k * p;
        int eu = b.upper + (b.winding + k) * q;
        if (l0 <= el && el <= l0 + p && ulo <= eu && eu <= uhi)
          lifts.push_back({el - l0, upper_id(eu)});
      }
    }
    if (lifts.size() != 1)
      throw std::logic_error("arc " + format_arc(a) + " has " + std::to_string(lifts.size()) +
                             " polygon lifts, expected exactly one");
    put_side(lifts.front().a, lifts.front().b, i);
  }

  auto has_side = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return side_to_arc.count({a, b}) != 0;
  };
  auto arc_of = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return side_to_arc.at({a, b});
  };

  BMatrix out;
  out.m.assign(n, std::vector<int>(n, 0));
  int triangles = 0;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      for (int k = j + 1; k < nv; ++k) {
        if (!has_side(i, j) || !has_side(j, k) || !has_side(i, k)) continue;
        ++triangles;
        // Polygon vertices are listed counterclockwise, so (i, j, k) is an
        // oriented triangle; successive sides contribute with sign.
        int e[3] = {arc_of(i, j), arc_of(j, k), arc_of(k, i)};
        for (int c = 0; c < 3; ++c) {
          int x = e[c], y = e[(c + 1) % 3];
          if (x >= 0 && y >= 0) {
            out.m[x][y] += 1;
            out.m[y][x] -= 1;
          }
        }
      }
  if (triangles != nv - 2)
    throw std::logic_error("polygon triangulation has " + std::to_string(triangles) +
                           " triangles, expected " + std::to_string(nv - 2));
  return out;
}

inline BMatrix quiver_of(const Triangulation& t) {
  for (const Arc& a : t.arcs())
    if (is_bridging(a)) return quiver_of(t, a);
  throw std::invalid_argument("quiver undefined for strictly asymptotic triangulation");
}

// Matrix mutation in direction k.
inline BMatrix mutate_matrix(const BMatrix& b, int k) {
  int n = b.size();
  if (k < 0 || k >= n) throw std::invalid_argument("mutation direction out of range");
  BMatrix out = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k)
        out.m[i][j] = -b.m[i][j];
      else
        out.m[i][j] = b.m[i][j] + (std::abs(b.m[i][k]) * b.m[k][j] + b.m[i][k] * std::abs(b.m[k][j])) / 2;
    }
  return out;
}

namespace detail {

inline std::vector<int> row_profile(const BMatrix& b, int i) {
  std::vector<int> prof = b.m[i];
  std::sort(prof.begin(), prof.end());
  return prof;
}

inline bool extend_isomorphism(const BMatrix& a, const BMatrix& b, std::vector<int>& perm,
                               std::vector<bool>& used,
                               const std::vector<std::vector<int>>& profs_a,
                               const std::vector<std::vector<int>>& profs_b) {
  int i = static_cast<int>(perm.size());
  if (i == a.size()) return true;
  for (int j = 0; j < a.size(); ++j) {
    if (used[j] || profs_a[i] != profs_b[j]) continue;
    bool ok = true;
    for (int k = 0; k < i && ok; ++k)
      ok = a.m[i][k] == b.m[j][perm[k]] && a.m[k][i] == b.m[perm[k]][j];
    if (!ok) continue;
    perm.push_back(j);
    used[j] = true;
    if (extend_isomorphism(a, b, perm, used, profs_a, profs_b)) return true;
    perm.pop_back();
    used[j] = false;
  }
  return false;
}

}  // namespace detail

// Exact isomorphism of exchange matrices: some simultaneous row/column
// permutation carries one onto the other. Backtracking over partial
// permutations with sorted-row pruning; sizes here never exceed p + q.
inline bool isomorphic(const BMatrix& a, const BMatrix& b) {
  if (a.size() != b.size()) return false;
  int n = a.size();
  std::vector<std::vector<int>> profs_a, profs_b;
  for (int i = 0; i < n; ++i) {
    profs_a.push_back(detail::row_profile(a, i));
    profs_b.push_back(detail::row_profile(b, i));
  }
  {
    auto sa = profs_a, sb = profs_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> perm;
  std::vector<bool> used(n, false);
  return detail::extend_isomorphism(a, b, perm, used, profs_a, profs_b);
}

// --- text form ------------------------------------------------------------
// First line n, then n rows of n integers.

inline std::string to_text(const BMatrix& b) {
  std::ostringstream os;
  os << b.size() << "\n";
  for (const auto& row : b.m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

inline BMatrix parse_bmatrix(const std::string& text) {
  std::istringstream is(text);
  int n = 0;
  if (!(is >> n) || n < 0) throw std::invalid_argument("expected matrix size");
  BMatrix b;
  b.m.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(is >> b.m[i][j])) throw std::invalid_argument("truncated matrix");
  return b;
}

}  // namespace annulus
