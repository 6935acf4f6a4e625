#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "triangulation.hpp"

namespace annulus {

// Finite window of a sequence of triangulations, all on one surface.
struct SequenceWindow {
  std::vector<Triangulation> terms;

  explicit SequenceWindow(std::vector<Triangulation> ts) : terms(std::move(ts)) {
    if (terms.empty()) throw std::invalid_argument("empty sequence window");
    for (const Triangulation& t : terms)
      if (t.surface() != terms.front().surface())
        throw std::invalid_argument("mixed surfaces in window");
  }
};

enum class Convergence { Stabilizes, IncreasingWindow, DecreasingWindow, NotConvergentInWindow };

struct ConvergenceReport {
  // Index of the blueprint term: the earliest one whose twist orbit contains
  // every later term.
  int blueprint_index = 0;
  // Twist exponents of the terms from the blueprint on: terms[N+k] equals
  // D^{d_samples[k]} terms[N]; d_samples[0] is always 0.
  std::vector<int> d_samples;
  Convergence classification = Convergence::Stabilizes;
  // For Stabilizes: the settled exponent (last d sample).
  int stabilizes_at = 0;
  std::optional<Triangulation> limit;
};

// Limit of the constant-direction twist iteration D^{k} t as k runs to +inf
// or -inf: every bridging arc degenerates to the spiral pair at its
// endpoints; peripheral and spiral arcs persist. Strictly asymptotic
// triangulations are fixed points. The result is again a triangulation (one
// spiral per marked point an arc ends at, plus the surviving peripherals).
inline Triangulation limit_triangulation(const Triangulation& t, LimitSign sign) {
  if (t.strictly_asymptotic()) return t;
  std::set<Arc> arcs;
  for (const Arc& a : t.arcs())
    for (const Arc& l : limit_arc(t.surface(), a, sign)) arcs.insert(l);
  return Triangulation(t.surface(), std::vector<Arc>(arcs.begin(), arcs.end()));
}

// Classify the window against the model "eventually T_{N+k} = D^{d(k)} T_N
// with monotone d". The blueprint index N is the earliest index whose twist
// orbit absorbs the whole tail; the verdict then reads off the sampled
// exponents: constant tail = stabilized, strictly moving monotone tail =
// increasing/decreasing, non-monotone = no convergence visible in this
// window.
inline ConvergenceReport detect_convergence(const SequenceWindow& w) {
  const int n = static_cast<int>(w.terms.size());
  std::vector<OrbitForm> forms;
  forms.reserve(n);
  for (const Triangulation& t : w.terms) forms.push_back(canonical_orbit_form(t));

  int N = n - 1;
  for (int i = n - 1; i >= 0; --i) {
    if (forms[i].form == forms[n - 1].form)
      N = i;
    else
      break;
  }

  ConvergenceReport rep;
  rep.blueprint_index = N;
  for (int i = N; i < n; ++i) rep.d_samples.push_back(forms[N].shift - forms[i].shift);

  const auto& d = rep.d_samples;
  bool up = true, down = true;
  for (std::size_t k = 1; k < d.size(); ++k) {
    if (d[k] < d[k - 1]) up = false;
    if (d[k] > d[k - 1]) down = false;
  }
  if (!up && !down) {
    rep.classification = Convergence::NotConvergentInWindow;
    return rep;
  }
  std::size_t L = d.size();
  if (L == 1 || d[L - 1] == d[L - 2]) {
    rep.classification = Convergence::Stabilizes;
    rep.stabilizes_at = d.back();
    rep.limit = dehn_twist(w.terms[N], d.back());
  } else if (d[L - 1] > d[L - 2]) {
    rep.classification = Convergence::IncreasingWindow;
    rep.limit = limit_triangulation(w.terms[N], LimitSign::Plus);
  } else {
    rep.classification = Convergence::DecreasingWindow;
    rep.limit = limit_triangulation(w.terms[N], LimitSign::Minus);
  }
  return rep;
}

namespace detail {

// Lexicographically smallest maximum-length subsequence of positions whose
// values are strictly monotone in the given sense.
inline std::vector<int> best_monotone(const std::vector<int>& vals, bool increasing) {
  int n = static_cast<int>(vals.size());
  auto before = [&](int a, int b) { return increasing ? a < b : a > b; };
  std::vector<int> best_from(n, 1);
  for (int i = n - 1; i >= 0; --i)
    for (int j = i + 1; j < n; ++j)
      if (before(vals[i], vals[j])) best_from[i] = std::max(best_from[i], 1 + best_from[j]);
  int total = 0;
  for (int i = 0; i < n; ++i) total = std::max(total, best_from[i]);
  std::vector<int> out;
  int need = total;
  int last = -1;
  for (int i = 0; i < n && need > 0; ++i) {
    if (best_from[i] != need) continue;
    if (!out.empty() && !before(vals[last], vals[i])) continue;
    out.push_back(i);
    last = i;
    --need;
  }
  return out;
}

}  // namespace detail

// Indices of a subwindow on which detect_convergence cannot report failure:
// restrict to the largest twist orbit present (ties to the earliest), then
// prefer a repeated exponent (a stabilizing subsequence), otherwise take the
// longest strictly monotone run of exponents. Ties always resolve to the
// lexicographically smallest index list.
inline std::vector<int> extract_converging_subsequence(const SequenceWindow& w) {
  const int n = static_cast<int>(w.terms.size());
  std::vector<OrbitForm> forms;
  forms.reserve(n);
  for (const Triangulation& t : w.terms) forms.push_back(canonical_orbit_form(t));

  std::map<Triangulation, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[forms[i].form].push_back(i);
  const std::vector<int>* group = nullptr;
  for (const auto& [rep, idx] : groups)
    if (!group || idx.size() > group->size() ||
        (idx.size() == group->size() && idx.front() < group->front()))
      group = &idx;

  std::vector<int> expo;
  for (int i : *group) expo.push_back(-forms[i].shift);

  std::map<int, std::vector<int>> by_value;  // exponent -> positions in group
  for (std::size_t k = 0; k < expo.size(); ++k) by_value[expo[k]].push_back(static_cast<int>(k));
  const std::vector<int>* stab = nullptr;
  for (const auto& [v, pos] : by_value)
    if (pos.size() >= 2 && (!stab || pos.front() < stab->front())) stab = &pos;

  std::vector<int> picked;
  if (stab) {
    picked = *stab;
  } else {
    std::vector<int> inc = detail::best_monotone(expo, true);
    std::vector<int> dec = detail::best_monotone(expo, false);
    picked = inc.size() >= dec.size() ? inc : dec;
    if (inc.size() == dec.size()) picked = std::min(inc, dec);
  }
  std::vector<int> out;
  for (int k : picked) out.push_back((*group)[k]);
  return out;
}

// Strictly asymptotic triangulation that no converging sequence of ordinary
// triangulations reaches: spiral signs of such limits agree on each boundary
// with one global sign, so mixing Pruefer spirals below with adic ones above
// certifies non-surjectivity of the limit map.
inline Triangulation non_surjectivity_witness(const Surface& s) {
  check_surface(s);
  if (s.q < 1)
    throw std::invalid_argument("witness requires marked points on both boundaries");
  std::vector<Arc> arcs;
  for (int m = 0; m < s.p; ++m) arcs.push_back(Pruefer{Boundary::Lower, m});
  for (int m = 0; m < s.q; ++m) arcs.push_back(Adic{Boundary::Upper, m});
  return Triangulation(s, std::move(arcs));
}

// --- text forms -------------------------------------------------------------
// A sequence file is triangulation blocks separated by lines containing only
// "---".

inline std::vector<Triangulation> parse_sequence(const std::string& text) {
  std::vector<Triangulation> out;
  std::istringstream is(text);
  std::string line, block;
  auto flush = [&]() {
    bool blank = block.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!blank) out.push_back(parse_triangulation(block));
    block.clear();
  };
  while (std::getline(is, line)) {
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
      trimmed.pop_back();
    if (trimmed == "---") {
      flush();
      continue;
    }
    block += line;
    block += "\n";
  }
  flush();
  if (out.empty()) throw std::invalid_argument("sequence file contains no triangulations");
  return out;
}

inline std::string write_sequence(const std::vector<Triangulation>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += "---\n";
    out += to_text(terms[i]);
  }
  return out;
}

inline std::string to_text(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "blueprint_index: " << r.blueprint_index << "\n";
  os << "d_samples:";
  for (int d : r.d_samples) os << " " << d;
  os << "\n";
  os << "classification: ";
  switch (r.classification) {
    case Convergence::Stabilizes: os << "Stabilizes(" << r.stabilizes_at << ")"; break;
    case Convergence::IncreasingWindow: os << "IncreasingWindow"; break;
    case Convergence::DecreasingWindow: os << "DecreasingWindow"; break;
    case Convergence::NotConvergentInWindow: os << "NotConvergentInWindow"; break;
  }
  os << "\n";
  if (r.limit) {
    os << "limit:\n" << to_text(*r.limit);
  } else {
    os << "limit: none\n";
  }
  return os.str();
}

}  // namespace annulus
