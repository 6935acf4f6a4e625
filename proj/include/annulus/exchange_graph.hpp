#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "triangulation.hpp"

namespace annulus {

enum class GraphMode { TubeFull, BoundaryFull, OrdinaryBfs };

inline const char* to_string(GraphMode m) {
  switch (m) {
    case GraphMode::TubeFull: return "tube";
    case GraphMode::BoundaryFull: return "boundary";
    default: return "bfs";
  }
}

// Flip graph: vertices are triangulations in canonical order, edges join
// triangulations differing in exactly one arc. Edge pairs are stored with
// i < j, sorted.
struct ExchangeGraph {
  Surface surface;
  GraphMode mode = GraphMode::TubeFull;
  int radius = 0;                        // OrdinaryBfs only
  std::optional<Triangulation> seed;     // OrdinaryBfs only
  std::vector<Triangulation> vertices;
  std::vector<std::pair<int, int>> edges;
};

namespace detail {

// Re-index vertices into canonical sorted order and normalize the edge list.
inline void canonicalize_graph(ExchangeGraph& g) {
  std::vector<int> order(g.vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.vertices[a] < g.vertices[b]; });
  std::vector<int> where(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) where[order[i]] = static_cast<int>(i);
  std::vector<Triangulation> verts;
  verts.reserve(order.size());
  for (int idx : order) verts.push_back(std::move(g.vertices[idx]));
  g.vertices = std::move(verts);
  for (auto& e : g.edges) {
    e = {where[e.first], where[e.second]};
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

// Flip-closure BFS from the seed. depth_limit < 0 means unlimited (the
// closure must then be finite, which holds on tubes). With a limit, vertices
// at the limit still have all their flips computed so that every edge of the
// induced ball is present, but nothing beyond the ball is added.
inline ExchangeGraph flip_closure(const Triangulation& seed, int depth_limit) {
  ExchangeGraph g;
  g.surface = seed.surface();
  std::map<Triangulation, int> id;
  std::vector<int> depth;
  std::deque<int> todo;
  id.emplace(seed, 0);
  g.vertices.push_back(seed);
  depth.push_back(0);
  todo.push_back(0);
  std::set<std::pair<int, int>> edges;
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    Triangulation t = g.vertices[v];
    for (const Arc& theta : t.arcs()) {
      Triangulation u = mutate(t, theta);
      auto it = id.find(u);
      if (it == id.end()) {
        if (depth_limit >= 0 && depth[v] >= depth_limit) continue;
        int nid = static_cast<int>(g.vertices.size());
        id.emplace(u, nid);
        g.vertices.push_back(u);
        depth.push_back(depth[v] + 1);
        todo.push_back(nid);
        edges.emplace(std::min(v, nid), std::max(v, nid));
      } else {
        edges.emplace(std::min(v, it->second), std::max(v, it->second));
      }
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  canonicalize_graph(g);
  return g;
}

}  // namespace detail

// Full exchange graph of the tube C_{p,0}: finite, connected and p-regular,
// reached by flip closure from the all-Pruefer triangulation.
inline ExchangeGraph build_tube_graph(int p) {
  if (p < 1) throw std::invalid_argument("tube requires p >= 1");
  Surface s{p, 0};
  std::vector<Arc> arcs;
  for (int m = 0; m < p; ++m) arcs.push_back(Pruefer{Boundary::Lower, m});
  ExchangeGraph g = detail::flip_closure(Triangulation(s, std::move(arcs)), -1);
  g.mode = GraphMode::TubeFull;
  return g;
}

// Exchange graph on the strictly asymptotic triangulations of C_{p,q}: the
// product of the two tube graphs, one factor per boundary.
inline ExchangeGraph build_boundary_graph(const Surface& s) {
  check_surface(s);
  if (s.q < 1)
    throw std::invalid_argument("boundary graph requires marked points on both boundaries");
  ExchangeGraph gp = build_tube_graph(s.p);
  ExchangeGraph gq = build_tube_graph(s.q);

  auto relabel = [](const Triangulation& t, Boundary to) {
    std::vector<Arc> arcs;
    for (const Arc& a : t.arcs()) {
      if (const auto* pe = std::get_if<Peripheral>(&a))
        arcs.push_back(Peripheral{to, pe->base, pe->span});
      else if (const auto* pr = std::get_if<Pruefer>(&a))
        arcs.push_back(Pruefer{to, pr->point});
      else
        arcs.push_back(Adic{to, std::get<Adic>(a).point});
    }
    return arcs;
  };

  ExchangeGraph g;
  g.surface = s;
  g.mode = GraphMode::BoundaryFull;
  int nb = static_cast<int>(gq.vertices.size());
  for (const Triangulation& ta : gp.vertices)
    for (const Triangulation& tb : gq.vertices) {
      std::vector<Arc> arcs = relabel(ta, Boundary::Lower);
      std::vector<Arc> up = relabel(tb, Boundary::Upper);
      arcs.insert(arcs.end(), up.begin(), up.end());
      g.vertices.emplace_back(s, std::move(arcs));
    }
  for (const auto& e : gp.edges)
    for (int b = 0; b < nb; ++b)
      g.edges.emplace_back(e.first * nb + b, e.second * nb + b);
  for (int a = 0; a < static_cast<int>(gp.vertices.size()); ++a)
    for (const auto& e : gq.edges)
      g.edges.emplace_back(a * nb + e.first, a * nb + e.second);
  detail::canonicalize_graph(g);
  return g;
}

// Ball of the given radius around an ordinary seed triangulation in the flip
// graph, with all edges among the collected vertices.
inline ExchangeGraph bfs_ordinary(const Triangulation& seed, int radius) {
  if (seed.strictly_asymptotic())
    throw std::invalid_argument("seed must be ordinary (contain a bridging arc)");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  ExchangeGraph g = detail::flip_closure(seed, radius);
  g.mode = GraphMode::OrdinaryBfs;
  g.radius = radius;
  g.seed = seed;
  return g;
}

// Every triangulation assembled directly from the arc universe with bounded
// winding: all peripheral and spiral arcs plus bridging arcs with |winding|
// <= winding_bound. Independent of the flip search; used as its oracle.
inline std::vector<Triangulation> enumerate_bruteforce(const Surface& s, int winding_bound) {
  check_surface(s);
  if (winding_bound < 0) throw std::invalid_argument("winding bound must be >= 0");
  std::vector<Arc> universe;
  for (Boundary b : {Boundary::Lower, Boundary::Upper}) {
    if (points_on(s, b) < 2) continue;
    for (const Arc& a : enumerate_peripheral_arcs(s, b)) universe.push_back(a);
  }
  for (const Arc& a : enumerate_strict_arcs(s)) universe.push_back(a);
  if (s.q >= 1)
    for (const Arc& a : enumerate_bridging_arcs(s, -winding_bound, winding_bound))
      universe.push_back(a);
  std::sort(universe.begin(), universe.end());

  int n = static_cast<int>(universe.size());
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      ok[i][j] = ok[j][i] = !crosses(s, universe[i], universe[j]);

  int target = expected_arc_count(s);
  std::vector<Triangulation> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == target) {
      std::vector<Arc> arcs;
      for (int i : chosen) arcs.push_back(universe[i]);
      out.emplace_back(s, std::move(arcs));
      return;
    }
    int need = target - static_cast<int>(chosen.size());
    for (int i = start; i + need <= n; ++i) {
      bool fits = true;
      for (int c : chosen)
        if (!ok[c][i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// --- statistics -----------------------------------------------------------

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::map<int, std::size_t> degree_histogram;
  bool connected = false;
  // Tube graphs only: number of vertices containing at least one Pruefer arc.
  std::optional<std::size_t> pruefer_containing_count;
};

inline GraphStats graph_stats(const ExchangeGraph& g) {
  GraphStats st;
  st.vertex_count = g.vertices.size();
  st.edge_count = g.edges.size();
  std::vector<int> deg(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    ++deg[e.first];
    ++deg[e.second];
  }
  for (int d : deg) ++st.degree_histogram[d];
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<bool> seen(g.vertices.size(), false);
  std::deque<int> todo;
  std::size_t reached = 0;
  if (!g.vertices.empty()) {
    seen[0] = true;
    todo.push_back(0);
    ++reached;
  }
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        todo.push_back(u);
      }
  }
  st.connected = reached == g.vertices.size();
  if (g.mode == GraphMode::TubeFull) {
    std::size_t c = 0;
    for (const Triangulation& t : g.vertices)
      if (std::any_of(t.arcs().begin(), t.arcs().end(),
                      [](const Arc& a) { return std::holds_alternative<Pruefer>(a); }))
        ++c;
    st.pruefer_containing_count = c;
  }
  return st;
}

// --- exports ----------------------------------------------------------------

inline std::string vertex_label(const Triangulation& t) {
  std::string out;
  for (const Arc& a : t.arcs()) {
    if (!out.empty()) out += "; ";
    out += format_arc(a);
  }
  return out;
}

// Undirected DOT: one quoted node line per vertex, then one "a" -- "b" line
// per edge, both in canonical order.
inline std::string export_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph {\n";
  for (const Triangulation& t : g.vertices) os << "  \"" << vertex_label(t) << "\";\n";
  for (const auto& e : g.edges)
    os << "  \"" << vertex_label(g.vertices[e.first]) << "\" -- \""
       << vertex_label(g.vertices[e.second]) << "\";\n";
  os << "}\n";
  return os.str();
}

inline std::string export_adjacency_json(const ExchangeGraph& g) {
  nlohmann::json j;
  j["surface"] = {{"p", g.surface.p}, {"q", g.surface.q}};
  j["mode"] = to_string(g.mode);
  if (g.mode == GraphMode::OrdinaryBfs) {
    j["radius"] = g.radius;
    nlohmann::json seed = nlohmann::json::array();
    for (const Arc& a : g.seed->arcs()) seed.push_back(format_arc(a));
    j["seed"] = seed;
  }
  nlohmann::json verts = nlohmann::json::array();
  for (const Triangulation& t : g.vertices) {
    nlohmann::json v = nlohmann::json::array();
    for (const Arc& a : t.arcs()) v.push_back(format_arc(a));
    verts.push_back(v);
  }
  j["vertices"] = verts;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

inline ExchangeGraph parse_adjacency_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ExchangeGraph g;
  g.surface = Surface{j.at("surface").at("p").get<int>(), j.at("surface").at("q").get<int>()};
  check_surface(g.surface);
  std::string mode = j.at("mode").get<std::string>();
  if (mode == "tube")
    g.mode = GraphMode::TubeFull;
  else if (mode == "boundary")
    g.mode = GraphMode::BoundaryFull;
  else if (mode == "bfs")
    g.mode = GraphMode::OrdinaryBfs;
  else
    throw std::invalid_argument("unknown graph mode '" + mode + "'");
  auto parse_vertex = [&](const nlohmann::json& v) {
    std::vector<Arc> arcs;
    for (const auto& line : v) arcs.push_back(parse_arc(line.get<std::string>()));
    return Triangulation(g.surface, std::move(arcs));
  };
  if (g.mode == GraphMode::OrdinaryBfs) {
    g.radius = j.at("radius").get<int>();
    g.seed = parse_vertex(j.at("seed"));
  }
  for (const auto& v : j.at("vertices")) g.vertices.push_back(parse_vertex(v));
  int n = static_cast<int>(g.vertices.size());
  for (const auto& e : j.at("edges")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    g.edges.emplace_back(a, b);
  }
  return g;
}

}  // namespace annulus
