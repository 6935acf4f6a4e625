#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace annulus {

enum class Boundary { Lower, Upper };

inline const char* to_string(Boundary b) {
  return b == Boundary::Lower ? "L" : "U";
}

inline Boundary other(Boundary b) {
  return b == Boundary::Lower ? Boundary::Upper : Boundary::Lower;
}

// Marked annulus C_{p,q}: p marked points on the lower boundary circle and q
// on the upper one. q == 0 degenerates the upper boundary to a puncture; that
// surface is the tube C_{p,0}. Requires p >= 1.
struct Surface {
  int p = 1;
  int q = 0;

  bool is_tube() const { return q == 0; }
  auto operator<=>(const Surface&) const = default;
};

inline void check_surface(const Surface& s) {
  if (s.p < 1 || s.q < 0)
    throw std::invalid_argument("surface requires p >= 1 and q >= 0, got p=" +
                                std::to_string(s.p) + " q=" + std::to_string(s.q));
}

// Number of marked points on the given boundary circle.
inline int points_on(const Surface& s, Boundary b) {
  return b == Boundary::Lower ? s.p : s.q;
}

inline void check_boundary(const Surface& s, Boundary b) {
  if (points_on(s, b) < 1)
    throw std::invalid_argument("boundary " + std::string(to_string(b)) +
                                " carries no marked points on this surface");
}

}  // namespace annulus
