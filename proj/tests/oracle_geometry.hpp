#pragma once

// Test-only crossing oracle, independent of the rule-based implementation.
// Arcs are realized as explicit polylines in the universal cover (lower
// boundary = line y 0, upper = line y 1, deck translation x -> x + 1) and
// crossings are decided by exact rational segment intersection, exempting
// touches at shared marked endpoints. Shapes are chosen so that homotopic
// straightening is never needed:
//   - peripheral arcs are shallow trapezoid bumps whose maximal slope is
//     strictly below the minimal slope of any bridging chord in range, so a
//     chord can only meet a bump when the crossing is topologically forced;
//   - spirals are steep staircases that rise far above the bump band and
//     drift one unit per turn, truncated after enough turns to witness every
//     crossing with the translates considered;
//   - bridging arcs are straight chords.

#include <algorithm>
#include <vector>

#include <annulus/arc.hpp>
#include <annulus/lift.hpp>
#include <annulus/rational.hpp>
#include <annulus/surface.hpp>

namespace testoracle {

using annulus::Arc;
using annulus::Boundary;
using annulus::Rat;
using annulus::Surface;

struct Pt {
  Rat x, y;
  friend bool operator==(const Pt&, const Pt&) = default;
};

struct Poly {
  std::vector<Pt> pts;
  std::vector<Pt> marked;  // endpoints where touching another arc is allowed
};

inline Poly translated(const Poly& p, int k) {
  Poly out = p;
  for (Pt& q : out.pts) q.x = q.x + Rat(k);
  for (Pt& q : out.marked) q.x = q.x + Rat(k);
  return out;
}

// One polyline representative of the arc; the scale K (two more than the
// largest |winding| among the pair under test) fixes band heights and spiral
// truncation so the slope separation arguments hold for both arcs at once.
inline Poly build_polyline(const Surface& s, const Arc& a, int K) {
  Poly out;
  if (const auto* pe = std::get_if<annulus::Peripheral>(&a)) {
    int r = annulus::points_on(s, pe->boundary);
    Rat eps(1, 2LL * r);
    Rat H(1, 4LL * r * (K + 2));
    Rat h = H * Rat(2LL * r * pe->span + pe->base + 1, 2LL * r * (r + 1));
    Rat x1(pe->base, r), x2(pe->base + pe->span, r);
    bool lower = pe->boundary == Boundary::Lower;
    auto y = [&](Rat v) { return lower ? v : Rat(1) - v; };
    out.pts = {{x1, y(0)}, {x1 + eps, y(h)}, {x2 - eps, y(h)}, {x2, y(0)}};
    out.marked = {{x1, y(0)}, {x2, y(0)}};
  } else if (const auto* br = std::get_if<annulus::Bridging>(&a)) {
    Pt lo{Rat(br->lower, s.p), Rat(0)};
    Pt hi{Rat(br->upper, s.q) + Rat(br->winding), Rat(1)};
    out.pts = {lo, hi};
    out.marked = {lo, hi};
  } else {
    Boundary b = *annulus::based_at(a);
    int point = std::holds_alternative<annulus::Pruefer>(a) ? std::get<annulus::Pruefer>(a).point
                                                            : std::get<annulus::Adic>(a).point;
    int dir = annulus::spiral_drift(b, annulus::spiral_sign(a));
    int r = annulus::points_on(s, b);
    Rat delta(1, 8LL * r);
    const Rat slo(1, 8), shi(3, 16);
    bool lower = b == Boundary::Lower;
    auto y = [&](Rat v) { return lower ? v : Rat(1) - v; };
    Rat x0(point, r);
    out.pts.push_back({x0, y(0)});
    out.pts.push_back({x0 + Rat(dir) * delta, y(slo)});
    int turns = K + 3;
    for (int j = 1; j <= turns; ++j)
      out.pts.push_back({x0 + Rat(dir) * (delta + Rat(j)), y(slo + (shi - slo) * Rat(j, j + 1))});
    out.marked = {{x0, y(0)}};
  }
  return out;
}

inline int sgn(const Rat& r) { return r.sign(); }

// (b - o) x (c - o)
inline Rat cross2(const Pt& o, const Pt& b, const Pt& c) {
  return (b.x - o.x) * (c.y - o.y) - (b.y - o.y) * (c.x - o.x);
}

inline bool in_box(const Pt& p, const Pt& a, const Pt& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

inline bool is_marked(const Poly& poly, const Pt& p) {
  for (const Pt& m : poly.marked)
    if (m == p) return true;
  return false;
}

// True if segments PQ (of polyline A) and RS (of polyline B) meet anywhere
// except at a point marked on both polylines.
inline bool seg_pair_crosses(const Pt& P, const Pt& Q, const Pt& R, const Pt& S, const Poly& A,
                             const Poly& B) {
  int d1 = sgn(cross2(P, Q, R));
  int d2 = sgn(cross2(P, Q, S));
  int d3 = sgn(cross2(R, S, P));
  int d4 = sgn(cross2(R, S, Q));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;  // transversal, interior to both

  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    // Collinear: any overlap longer than a point is a crossing; a single
    // shared point falls through to the touch checks below.
    bool by_x = P.x != Q.x || R.x != S.x;
    auto coord = [&](const Pt& p) { return by_x ? p.x : p.y; };
    Rat lo = std::max(std::min(coord(P), coord(Q)), std::min(coord(R), coord(S)));
    Rat hi = std::min(std::max(coord(P), coord(Q)), std::max(coord(R), coord(S)));
    if (lo < hi) return true;
  }

  auto touch = [&](const Pt& t) { return !(is_marked(A, t) && is_marked(B, t)); };
  if (d1 == 0 && in_box(R, P, Q) && touch(R)) return true;
  if (d2 == 0 && in_box(S, P, Q) && touch(S)) return true;
  if (d3 == 0 && in_box(P, R, S) && touch(P)) return true;
  if (d4 == 0 && in_box(Q, R, S) && touch(Q)) return true;
  return false;
}

inline bool polylines_cross(const Poly& a, const Poly& b) {
  Rat axlo = a.pts.front().x, axhi = axlo;
  for (const Pt& p : a.pts) {
    axlo = std::min(axlo, p.x);
    axhi = std::max(axhi, p.x);
  }
  Rat bxlo = b.pts.front().x, bxhi = bxlo;
  for (const Pt& p : b.pts) {
    bxlo = std::min(bxlo, p.x);
    bxhi = std::max(bxhi, p.x);
  }
  if (axhi < bxlo || bxhi < axlo) return false;
  for (std::size_t i = 0; i + 1 < a.pts.size(); ++i)
    for (std::size_t j = 0; j + 1 < b.pts.size(); ++j)
      if (seg_pair_crosses(a.pts[i], a.pts[i + 1], b.pts[j], b.pts[j + 1], a, b)) return true;
  return false;
}

// Geometric crossing decision: fix one lift of a, run over enough deck
// translates of a lift of b. Two arc classes cross iff some pair of lifts
// does.
inline bool crosses(const Surface& s, const Arc& a, const Arc& b) {
  if (a == b) return false;
  int maxw = 0;
  for (const Arc* arc : {&a, &b})
    if (const auto* br = std::get_if<annulus::Bridging>(arc))
      maxw = std::max(maxw, br->winding < 0 ? -br->winding : br->winding);
  int K = maxw + 2;
  Poly pa = build_polyline(s, a, K);
  Poly pb = build_polyline(s, b, K);
  int range = K + 5;
  for (int k = -range; k <= range; ++k)
    if (polylines_cross(pa, translated(pb, k))) return true;
  return false;
}

}  // namespace testoracle
