#pragma once

#include <variant>

#include "arc.hpp"
#include "rational.hpp"
#include "surface.hpp"

namespace annulus {

// Universal-cover picture: the lower boundary unrolls to the line y = 0 with
// marked points at i/p, the upper one to y = 1 with marked points at u/q + w
// for every integer w, and the deck transformation is x -> x + 1. The charts
// below give one distinguished representative per arc; the rest are its
// integer translates.

// Interval [start, end] along the boundary line (end - start = span/r <= 1).
struct PeripheralLift {
  Boundary boundary;
  Rat start;
  Rat end;
};

// Straight chord from (lower_x, 0) to (upper_x, 1).
struct BridgingLift {
  Rat lower_x;
  Rat upper_x;
};

// Spiral leaving (base, y of boundary) and drifting without bound in the
// `direction` sense (+1 rightward, -1 leftward) while approaching the core.
struct SpiralLift {
  Boundary boundary;
  Rat base;
  int direction;
};

using LiftChart = std::variant<PeripheralLift, BridgingLift, SpiralLift>;

// Cover drift direction of a spiral. Positive winding around the core pulls
// a lower spiral rightward and an upper one leftward (the two boundary lines
// carry opposite induced orientations).
inline int spiral_drift(Boundary b, int sign) {
  return b == Boundary::Lower ? sign : -sign;
}

inline LiftChart lift_chart(const Surface& s, const Arc& a) {
  check_arc(s, a);
  if (const auto* p = std::get_if<Peripheral>(&a)) {
    int r = points_on(s, p->boundary);
    return PeripheralLift{p->boundary, Rat(p->base, r), Rat(p->base + p->span, r)};
  }
  if (const auto* b = std::get_if<Bridging>(&a))
    return BridgingLift{Rat(b->lower, s.p), Rat(b->upper, s.q) + Rat(b->winding)};
  if (const auto* pr = std::get_if<Pruefer>(&a)) {
    int r = points_on(s, pr->boundary);
    return SpiralLift{pr->boundary, Rat(pr->point, r), spiral_drift(pr->boundary, 1)};
  }
  const auto& ad = std::get<Adic>(a);
  int r = points_on(s, ad.boundary);
  return SpiralLift{ad.boundary, Rat(ad.point, r), spiral_drift(ad.boundary, -1)};
}

}  // namespace annulus
