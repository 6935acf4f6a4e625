#pragma once

#include <compare>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "surface.hpp"

namespace annulus {

// Arc alongside one boundary circle, from marked point `base` to marked point
// (base + span) mod r, bulging away from that boundary. span runs from 2 to r;
// span == r wraps once around and returns to its own base point. (span 1 would
// be homotopic into the boundary and span 0 is degenerate, so both are
// excluded.)
struct Peripheral {
  Boundary boundary;
  int base;
  int span;
  auto operator<=>(const Peripheral&) const = default;
};

// Arc from marked point `lower` on the lower boundary to `upper` on the upper
// one; `winding` is the signed number of times it wraps around the core curve.
struct Bridging {
  int lower;
  int upper;
  int winding;
  auto operator<=>(const Bridging&) const = default;
};

// Spiral emanating from one marked point and winding forever around the core,
// positively with respect to the induced orientation of its boundary.
struct Pruefer {
  Boundary boundary;
  int point;
  auto operator<=>(const Pruefer&) const = default;
};

// Spiral winding negatively; the mirror of the Pruefer spiral at the same
// point, and its unique flip partner in a one-point tube.
struct Adic {
  Boundary boundary;
  int point;
  auto operator<=>(const Adic&) const = default;
};

// Alternative order is the canonical arc order: peripheral < bridging <
// pruefer < adic, then fieldwise within a kind.
using Arc = std::variant<Peripheral, Bridging, Pruefer, Adic>;

inline bool is_peripheral(const Arc& a) { return std::holds_alternative<Peripheral>(a); }
inline bool is_bridging(const Arc& a) { return std::holds_alternative<Bridging>(a); }
inline bool is_strict(const Arc& a) {
  return std::holds_alternative<Pruefer>(a) || std::holds_alternative<Adic>(a);
}

// Boundary the arc is based at; nullopt for bridging arcs, which touch both.
inline std::optional<Boundary> based_at(const Arc& a) {
  if (const auto* p = std::get_if<Peripheral>(&a)) return p->boundary;
  if (const auto* pr = std::get_if<Pruefer>(&a)) return pr->boundary;
  if (const auto* ad = std::get_if<Adic>(&a)) return ad->boundary;
  return std::nullopt;
}

// Spiral direction: +1 for Pruefer, -1 for adic, 0 otherwise.
inline int spiral_sign(const Arc& a) {
  if (std::holds_alternative<Pruefer>(a)) return 1;
  if (std::holds_alternative<Adic>(a)) return -1;
  return 0;
}

inline std::string format_arc(const Arc& a);

inline void check_arc(const Surface& s, const Arc& a) {
  check_surface(s);
  if (const auto* p = std::get_if<Peripheral>(&a)) {
    check_boundary(s, p->boundary);
    int r = points_on(s, p->boundary);
    if (p->base < 0 || p->base >= r)
      throw std::invalid_argument("peripheral base out of range: " + format_arc(a));
    if (p->span < 2 || p->span > r)
      throw std::invalid_argument("peripheral span must lie in [2, r]: " + format_arc(a));
  } else if (const auto* b = std::get_if<Bridging>(&a)) {
    if (s.q < 1)
      throw std::invalid_argument("bridging arc on a tube: " + format_arc(a));
    if (b->lower < 0 || b->lower >= s.p)
      throw std::invalid_argument("bridging lower endpoint out of range: " + format_arc(a));
    if (b->upper < 0 || b->upper >= s.q)
      throw std::invalid_argument("bridging upper endpoint out of range: " + format_arc(a));
  } else if (const auto* pr = std::get_if<Pruefer>(&a)) {
    check_boundary(s, pr->boundary);
    if (pr->point < 0 || pr->point >= points_on(s, pr->boundary))
      throw std::invalid_argument("spiral base point out of range: " + format_arc(a));
  } else {
    const auto& ad = std::get<Adic>(a);
    check_boundary(s, ad.boundary);
    if (ad.point < 0 || ad.point >= points_on(s, ad.boundary))
      throw std::invalid_argument("spiral base point out of range: " + format_arc(a));
  }
}

// All spiral arcs of the surface: one Pruefer and one adic per marked point.
inline std::vector<Arc> enumerate_strict_arcs(const Surface& s) {
  check_surface(s);
  std::vector<Arc> out;
  for (Boundary b : {Boundary::Lower, Boundary::Upper})
    for (int m = 0; m < points_on(s, b); ++m) out.push_back(Pruefer{b, m});
  for (Boundary b : {Boundary::Lower, Boundary::Upper})
    for (int m = 0; m < points_on(s, b); ++m) out.push_back(Adic{b, m});
  return out;
}

// All peripheral arcs along one boundary: r(r-1) of them for r >= 2, none for
// r == 1 (every candidate would be degenerate or boundary-homotopic).
inline std::vector<Arc> enumerate_peripheral_arcs(const Surface& s, Boundary b) {
  check_surface(s);
  check_boundary(s, b);
  int r = points_on(s, b);
  std::vector<Arc> out;
  for (int base = 0; base < r; ++base)
    for (int span = 2; span <= r; ++span) out.push_back(Peripheral{b, base, span});
  return out;
}

// All bridging arcs with winding in [wlo, whi].
inline std::vector<Arc> enumerate_bridging_arcs(const Surface& s, int wlo, int whi) {
  check_surface(s);
  if (s.q < 1) throw std::invalid_argument("tube has no bridging arcs");
  if (wlo > whi) throw std::invalid_argument("empty winding range");
  std::vector<Arc> out;
  for (int l = 0; l < s.p; ++l)
    for (int u = 0; u < s.q; ++u)
      for (int w = wlo; w <= whi; ++w) out.push_back(Bridging{l, u, w});
  return out;
}

// Dehn twist along the core curve, k-th power: shifts bridging windings by k
// and fixes every peripheral and spiral arc.
inline Arc dehn_twist_arc(const Surface& s, const Arc& a, int k) {
  check_arc(s, a);
  if (const auto* b = std::get_if<Bridging>(&a))
    return Bridging{b->lower, b->upper, b->winding + k};
  return a;
}

enum class LimitSign { Plus, Minus };

inline LimitSign opposite(LimitSign s) {
  return s == LimitSign::Plus ? LimitSign::Minus : LimitSign::Plus;
}

// Limit of the twist iteration D^{k} a as k -> +inf (Plus) or -inf (Minus).
// A bridging arc degenerates to the pair of spirals at its endpoints, with
// the sign of the limit; everything else is twist-fixed and is its own limit.
inline std::vector<Arc> limit_arc(const Surface& s, const Arc& a, LimitSign sign) {
  check_arc(s, a);
  if (const auto* b = std::get_if<Bridging>(&a)) {
    if (sign == LimitSign::Plus)
      return {Pruefer{Boundary::Lower, b->lower}, Pruefer{Boundary::Upper, b->upper}};
    return {Adic{Boundary::Lower, b->lower}, Adic{Boundary::Upper, b->upper}};
  }
  return {a};
}

// --- text form ---------------------------------------------------------
// P <L|U> <base> <span>      peripheral
// B <lower> <upper> <winding>
// Pr <L|U> <point>           pruefer spiral
// Ad <L|U> <point>           adic spiral

inline std::string format_arc(const Arc& a) {
  std::ostringstream os;
  if (const auto* p = std::get_if<Peripheral>(&a))
    os << "P " << to_string(p->boundary) << " " << p->base << " " << p->span;
  else if (const auto* b = std::get_if<Bridging>(&a))
    os << "B " << b->lower << " " << b->upper << " " << b->winding;
  else if (const auto* pr = std::get_if<Pruefer>(&a))
    os << "Pr " << to_string(pr->boundary) << " " << pr->point;
  else {
    const auto& ad = std::get<Adic>(a);
    os << "Ad " << to_string(ad.boundary) << " " << ad.point;
  }
  return os.str();
}

namespace detail {

inline Boundary parse_boundary_token(const std::string& tok) {
  if (tok == "L") return Boundary::Lower;
  if (tok == "U") return Boundary::Upper;
  throw std::invalid_argument("expected boundary L or U, got '" + tok + "'");
}

inline int parse_int_token(const std::string& tok) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw std::invalid_argument("expected integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

inline Arc parse_arc(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> tok;
  for (std::string t; is >> t;) tok.push_back(t);
  auto want = [&](std::size_t n) {
    if (tok.size() != n)
      throw std::invalid_argument("malformed arc line: '" + text + "'");
  };
  if (tok.empty()) throw std::invalid_argument("empty arc line");
  if (tok[0] == "P") {
    want(4);
    return Peripheral{detail::parse_boundary_token(tok[1]), detail::parse_int_token(tok[2]),
                      detail::parse_int_token(tok[3])};
  }
  if (tok[0] == "B") {
    want(4);
    return Bridging{detail::parse_int_token(tok[1]), detail::parse_int_token(tok[2]),
                    detail::parse_int_token(tok[3])};
  }
  if (tok[0] == "Pr") {
    want(3);
    return Pruefer{detail::parse_boundary_token(tok[1]), detail::parse_int_token(tok[2])};
  }
  if (tok[0] == "Ad") {
    want(3);
    return Adic{detail::parse_boundary_token(tok[1]), detail::parse_int_token(tok[2])};
  }
  throw std::invalid_argument("unknown arc kind '" + tok[0] + "' in line '" + text + "'");
}

}  // namespace annulus
