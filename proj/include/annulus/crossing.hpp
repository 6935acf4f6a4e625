#pragma once

#include "arc.hpp"
#include "rational.hpp"
#include "surface.hpp"

namespace annulus {

namespace detail {

inline int mod(int a, int m) { return ((a % m) + m) % m; }

// Point lies strictly inside the boundary path from base to base+span?
inline bool strictly_inside(int base, int span, int point, int r) {
  int d = mod(point - base, r);
  return 0 < d && d < span;
}

// Two lifted intervals [a1, a1+s1] and [a2+kr, a2+s2+kr] interleave strictly
// for some shift k. Interval lengths are at most r, so |k| <= 2 suffices.
inline bool peripherals_cross(const Peripheral& x, const Peripheral& y, int r) {
  long long a1 = x.base, b1 = x.base + x.span;
  for (int k = -2; k <= 2; ++k) {
    long long a2 = y.base + static_cast<long long>(k) * r, b2 = a2 + y.span;
    if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)) return true;
  }
  return false;
}

// Universal-cover endpoints of two bridging arcs differ by A on the lower
// line and by B on the upper one. The arcs cross iff some deck translate
// separates the endpoints, i.e. some integer lies strictly between A and B.
inline bool bridgings_cross(const Surface& s, const Bridging& x, const Bridging& y) {
  Rat A(x.lower - y.lower, s.p);
  Rat B = Rat(x.upper - y.upper, s.q) + Rat(x.winding - y.winding);
  if (A == B) return false;
  Rat lo = A < B ? A : B;
  Rat hi = A < B ? B : A;
  return Rat(lo.floor() + 1) < hi;
}

inline bool bridging_crosses_peripheral(const Bridging& b, const Peripheral& p, int r) {
  int e = p.boundary == Boundary::Lower ? b.lower : b.upper;
  return strictly_inside(p.base, p.span, e, r);
}

}  // namespace detail

// Minimal geometric intersection test: do the two arcs intersect in every
// pair of representatives? Shared endpoints do not count as crossings. The
// full case analysis:
//   bridging  x bridging    -> integer strictly between the endpoint offsets
//   bridging  x peripheral  -> the bridging endpoint on that boundary lies
//                              strictly under the peripheral arc
//   peripheral x peripheral -> same boundary and lifted intervals interleave
//   spiral    x bridging    -> always (a spiral separates the bridging arc's
//                              endpoints after enough winding)
//   spiral    x peripheral  -> same boundary and the spiral's base point lies
//                              strictly under the peripheral arc
//   spiral    x spiral      -> same boundary and opposite winding directions
//                              (two spirals at one point with opposite signs
//                              cross; arcs on different boundaries never do)
inline bool crosses(const Surface& s, const Arc& a, const Arc& b) {
  check_arc(s, a);
  check_arc(s, b);

  if (is_strict(a) || is_strict(b)) {
    if (is_strict(a) && is_strict(b)) {
      Boundary ba = *based_at(a), bb = *based_at(b);
      if (ba != bb) return false;
      return spiral_sign(a) != spiral_sign(b);
    }
    const Arc& spiral = is_strict(a) ? a : b;
    const Arc& plain = is_strict(a) ? b : a;
    if (is_bridging(plain)) return true;
    const auto& p = std::get<Peripheral>(plain);
    Boundary sb = *based_at(spiral);
    if (sb != p.boundary) return false;
    int point = std::holds_alternative<Pruefer>(spiral) ? std::get<Pruefer>(spiral).point
                                                        : std::get<Adic>(spiral).point;
    return detail::strictly_inside(p.base, p.span, point, points_on(s, p.boundary));
  }

  if (is_bridging(a) && is_bridging(b))
    return detail::bridgings_cross(s, std::get<Bridging>(a), std::get<Bridging>(b));

  if (is_bridging(a) || is_bridging(b)) {
    const auto& br = std::get<Bridging>(is_bridging(a) ? a : b);
    const auto& p = std::get<Peripheral>(is_bridging(a) ? b : a);
    return detail::bridging_crosses_peripheral(br, p, points_on(s, p.boundary));
  }

  const auto& pa = std::get<Peripheral>(a);
  const auto& pb = std::get<Peripheral>(b);
  if (pa.boundary != pb.boundary) return false;
  return detail::peripherals_cross(pa, pb, points_on(s, pa.boundary));
}

// Distinct arcs are compatible iff they do not cross; an arc is not
// considered compatible with itself.
inline bool compatible(const Surface& s, const Arc& a, const Arc& b) {
  if (a == b) return false;
  return !crosses(s, a, b);
}

}  // namespace annulus
