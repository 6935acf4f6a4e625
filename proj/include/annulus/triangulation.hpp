#pragma once

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arc.hpp"
#include "crossing.hpp"
#include "surface.hpp"

namespace annulus {

// Number of arcs in every triangulation of the surface: p + q marked points
// when both boundaries carry some, p for the tube.
inline int expected_arc_count(const Surface& s) {
  return s.q >= 1 ? s.p + s.q : s.p;
}

// A triangulation is a maximal set of pairwise compatible arcs, stored in
// canonical order. Maximality is equivalent to the cardinality check, so the
// constructor verifies: every arc valid, no duplicates, no crossing pair,
// exactly expected_arc_count(s) arcs.
class Triangulation {
public:
  Triangulation(Surface s, std::vector<Arc> arcs) : surface_(s), arcs_(std::move(arcs)) {
    check_surface(surface_);
    for (const Arc& a : arcs_) check_arc(surface_, a);
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 1; i < arcs_.size(); ++i)
      if (arcs_[i - 1] == arcs_[i])
        throw std::invalid_argument("duplicate arc: " + format_arc(arcs_[i]));
    for (std::size_t i = 0; i < arcs_.size(); ++i)
      for (std::size_t j = i + 1; j < arcs_.size(); ++j)
        if (crosses(surface_, arcs_[i], arcs_[j]))
          throw std::invalid_argument("crossing pair (" + format_arc(arcs_[i]) + ", " +
                                      format_arc(arcs_[j]) + ")");
    int want = expected_arc_count(surface_);
    if (static_cast<int>(arcs_.size()) != want)
      throw std::invalid_argument("wrong cardinality (got " + std::to_string(arcs_.size()) +
                                  ", want " + std::to_string(want) + ")");
  }

  const Surface& surface() const { return surface_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool contains(const Arc& a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
  }

  // Strictly asymptotic: consists of peripheral and spiral arcs only. The
  // complementary (ordinary) case contains at least one bridging arc; mixed
  // sets of spirals and bridging arcs never validate, so the two classes
  // partition all triangulations.
  bool strictly_asymptotic() const {
    return std::none_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return is_bridging(a); });
  }

  auto operator<=>(const Triangulation&) const = default;

private:
  Surface surface_;
  std::vector<Arc> arcs_;
};

// --- boundary decomposition --------------------------------------------

struct BoundaryDecomposition {
  std::vector<Arc> lower_part;
  std::vector<Arc> upper_part;
};

// A strictly asymptotic triangulation splits into the arcs based at each of
// the two boundaries (p arcs below, q above when q >= 1; everything below on
// a tube). Undefined for ordinary triangulations.
inline BoundaryDecomposition decompose(const Triangulation& t) {
  if (!t.strictly_asymptotic())
    throw std::invalid_argument("decomposition undefined for ordinary triangulation");
  BoundaryDecomposition d;
  for (const Arc& a : t.arcs()) {
    if (*based_at(a) == Boundary::Lower)
      d.lower_part.push_back(a);
    else
      d.upper_part.push_back(a);
  }
  const Surface& s = t.surface();
  if (s.q >= 1 && (static_cast<int>(d.lower_part.size()) != s.p ||
                   static_cast<int>(d.upper_part.size()) != s.q))
    throw std::logic_error("boundary parts have sizes " + std::to_string(d.lower_part.size()) +
                           "+" + std::to_string(d.upper_part.size()) + ", expected " +
                           std::to_string(s.p) + "+" + std::to_string(s.q));
  return d;
}

// --- mutation -----------------------------------------------------------

// Flip of theta in t: the unique other arc completing t minus theta to a
// triangulation. Candidates are all peripheral and spiral arcs plus the
// bridging arcs whose winding lies within one of the windings present in t
// (the flip partner of a bridging arc never moves further than that); if the
// window turns up nothing it is retried once at double margin.
inline Triangulation mutate(const Triangulation& t, const Arc& theta) {
  if (!t.contains(theta))
    throw std::invalid_argument("mutate: arc not in triangulation: " + format_arc(theta));
  const Surface& s = t.surface();

  std::vector<Arc> rest;
  for (const Arc& a : t.arcs())
    if (a != theta) rest.push_back(a);

  int wlo = 0, whi = 0;
  bool saw_bridging = false;
  for (const Arc& a : t.arcs())
    if (const auto* b = std::get_if<Bridging>(&a)) {
      wlo = saw_bridging ? std::min(wlo, b->winding) : b->winding;
      whi = saw_bridging ? std::max(whi, b->winding) : b->winding;
      saw_bridging = true;
    }

  auto fits = [&](const Arc& c) {
    if (c == theta) return false;
    if (std::find(rest.begin(), rest.end(), c) != rest.end()) return false;
    for (const Arc& a : rest)
      if (crosses(s, c, a)) return false;
    return true;
  };
  auto survivors = [&](int margin) {
    std::vector<Arc> out;
    for (Boundary b : {Boundary::Lower, Boundary::Upper}) {
      if (points_on(s, b) < 2) continue;
      for (const Arc& c : enumerate_peripheral_arcs(s, b))
        if (fits(c)) out.push_back(c);
    }
    for (const Arc& c : enumerate_strict_arcs(s))
      if (fits(c)) out.push_back(c);
    if (s.q >= 1)
      for (const Arc& c : enumerate_bridging_arcs(s, wlo - margin, whi + margin))
        if (fits(c)) out.push_back(c);
    return out;
  };

  std::vector<Arc> cand = survivors(1);
  if (cand.empty()) cand = survivors(2);
  if (cand.empty()) throw std::logic_error("mutate: no partner in widened window");
  if (cand.size() > 1) throw std::logic_error("mutate: flip partner not unique");
  rest.push_back(cand.front());
  return Triangulation(s, std::move(rest));
}

// --- twist dynamics on triangulations ------------------------------------

inline Triangulation dehn_twist(const Triangulation& t, int k) {
  std::vector<Arc> arcs;
  for (const Arc& a : t.arcs()) arcs.push_back(dehn_twist_arc(t.surface(), a, k));
  return Triangulation(t.surface(), std::move(arcs));
}

struct OrbitForm {
  Triangulation form;
  int shift;  // the power of the twist that was applied
};

// Distinguished representative of the twist orbit of t: shift windings so the
// smallest one becomes 0. Strictly asymptotic triangulations are twist-fixed
// and are their own representative with shift 0.
inline OrbitForm canonical_orbit_form(const Triangulation& t) {
  int wmin = std::numeric_limits<int>::max();
  for (const Arc& a : t.arcs())
    if (const auto* b = std::get_if<Bridging>(&a)) wmin = std::min(wmin, b->winding);
  if (wmin == std::numeric_limits<int>::max()) return {t, 0};
  return {dehn_twist(t, -wmin), -wmin};
}

// --- text form ------------------------------------------------------------
// First line "surface <p> <q>", then one arc per line in canonical order.

inline std::string to_text(const Triangulation& t) {
  std::ostringstream os;
  os << "surface " << t.surface().p << " " << t.surface().q << "\n";
  for (const Arc& a : t.arcs()) os << format_arc(a) << "\n";
  return os.str();
}

inline Triangulation parse_triangulation(std::istream& is) {
  std::string line;
  Surface s;
  bool saw_header = false;
  std::vector<Arc> arcs;
  while (std::getline(is, line)) {
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
      trimmed.pop_back();
    if (trimmed.empty()) continue;
    if (!saw_header) {
      std::istringstream hs(trimmed);
      std::string word;
      hs >> word;
      if (word != "surface" || !(hs >> s.p >> s.q))
        throw std::invalid_argument("expected 'surface <p> <q>' header, got '" + trimmed + "'");
      saw_header = true;
      continue;
    }
    arcs.push_back(parse_arc(trimmed));
  }
  if (!saw_header) throw std::invalid_argument("missing 'surface <p> <q>' header");
  return Triangulation(s, std::move(arcs));
}

inline Triangulation parse_triangulation(const std::string& text) {
  std::istringstream is(text);
  return parse_triangulation(is);
}

}  // namespace annulus
