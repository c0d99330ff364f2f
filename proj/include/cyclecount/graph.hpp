#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclecount/errors.hpp"

namespace cyclecount {

// Masks index vertices 0-based (bit i = vertex i+1); this caps the vertex
// count a graph may carry. Well above the engine's 2^n table guard.
inline constexpr int kMaxVertices = 26;

// Simple labeled graph on vertices 1..n with a restricted prefix {1..r}.
// Values are immutable after construction and safe to share across threads.
struct LabeledGraph {
  int n = 0;
  int r = 0;                                // 0 <= r <= n; r in {0,1} count identically
  std::vector<std::pair<int, int>> edges;   // 1-based, u < v, sorted lexicographically
  std::vector<std::uint32_t> adj;           // adj[i] = bitmask of 0-based neighbors

  bool has_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n || v > n || u == v) return false;
    return (adj[static_cast<size_t>(u - 1)] >> (v - 1)) & 1u;
  }
  int degree(int u) const {
    return __builtin_popcount(adj[static_cast<size_t>(u - 1)]);
  }
  std::uint32_t full_mask() const {
    return n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1u));
  }
  std::uint32_t restricted_mask() const {
    return r == 0 ? 0u : ((1u << r) - 1u);
  }
  LabeledGraph with_r(int new_r) const {
    LabeledGraph g = *this;
    if (new_r < 0 || new_r > n) throw parameter_error("with_r: r out of range");
    g.r = new_r;
    return g;
  }
};

inline LabeledGraph make_graph(int n, std::vector<std::pair<int, int>> edges, int r = 0) {
  if (n < 0) throw parameter_error("graph: negative vertex count");
  if (n > kMaxVertices)
    throw parameter_error("graph: at most " + std::to_string(kMaxVertices) + " vertices supported");
  if (r < 0 || r > n) throw parameter_error("graph: r must satisfy 0 <= r <= n");
  LabeledGraph g;
  g.n = n;
  g.r = r;
  g.adj.assign(static_cast<size_t>(n), 0u);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) throw parameter_error("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n)
      throw parameter_error("graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "} out of range 1.." + std::to_string(n));
    if (!seen.insert({u, v}).second)
      throw parameter_error("graph: duplicate edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "}");
    g.adj[static_cast<size_t>(u - 1)] |= 1u << (v - 1);
    g.adj[static_cast<size_t>(v - 1)] |= 1u << (u - 1);
  }
  g.edges.assign(seen.begin(), seen.end());
  return g;
}

// --- Canonical families ------------------------------------------------------
//
// Labelings are fixed so that the restricted prefix {1..r} lands where the
// r-restricted formulas expect it: paths and cycles are labeled consecutively;
// star/wheel/fan put the center at vertex 1 (hub_last moves it to the last
// label, leaving it unrestricted for small r); the double star centers sit at
// vertices 1 and 2.

enum class Family {
  empty,
  path,
  cycle,
  complete,
  star,
  double_star,
  wheel,
  fan,
  complement_path,
  complement_cycle,
  tadpole,
  lollipop,
  barbell,
  complete_bipartite,
};

struct FamilySpec {
  Family family = Family::empty;
  int a = 0;            // primary size
  int b = 0;            // secondary size (double_star, tadpole, lollipop, complete_bipartite)
  int r = 0;
  bool hub_last = false;  // star/wheel/fan: hub at the last label instead of 1
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::empty: return "empty";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::double_star: return "double_star";
    case Family::wheel: return "wheel";
    case Family::fan: return "fan";
    case Family::complement_path: return "complement_path";
    case Family::complement_cycle: return "complement_cycle";
    case Family::tadpole: return "tadpole";
    case Family::lollipop: return "lollipop";
    case Family::barbell: return "barbell";
    case Family::complete_bipartite: return "complete_bipartite";
  }
  return "?";
}

LabeledGraph complement_graph(const LabeledGraph& g);

inline LabeledGraph make_family(const FamilySpec& spec) {
  const int a = spec.a, b = spec.b;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok)
      throw parameter_error("make_family: invalid size for " +
                            std::string(family_name(spec.family)) + " (" + what + ")");
  };
  std::vector<std::pair<int, int>> e;
  int n = 0;
  switch (spec.family) {
    case Family::empty:
      need(a >= 0, "need n >= 0");
      n = a;
      break;
    case Family::path:
      need(a >= 0, "need n >= 0");
      n = a;
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      break;
    case Family::cycle:
      need(a >= 3, "need n >= 3");
      n = a;
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      e.push_back({1, n});
      break;
    case Family::complete:
      need(a >= 0, "need n >= 0");
      n = a;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
      break;
    case Family::star: {
      need(a >= 1, "need n >= 1");
      n = a;
      const int hub = spec.hub_last ? n : 1;
      for (int i = 1; i <= n; ++i)
        if (i != hub) e.push_back({std::min(hub, i), std::max(hub, i)});
      break;
    }
    case Family::double_star: {
      // S_{a,b}: centers 1 and 2 joined by a bridge; a-1 leaves on center 1
      // (labels 3..a+1), b-1 leaves on center 2 (labels a+2..a+b).
      need(a >= 1 && b >= 1, "need both parts >= 1");
      n = a + b;
      e.push_back({1, 2});
      for (int i = 0; i < a - 1; ++i) e.push_back({1, 3 + i});
      for (int i = 0; i < b - 1; ++i) e.push_back({2, a + 2 + i});
      break;
    }
    case Family::wheel: {
      // W_a = K_1 joined to C_a; a+1 vertices.
      need(a >= 3, "need rim size >= 3");
      n = a + 1;
      const int hub = spec.hub_last ? n : 1;
      std::vector<int> rim;
      for (int i = 1; i <= n; ++i)
        if (i != hub) rim.push_back(i);
      for (int i = 0; i < a; ++i) {
        e.push_back({std::min(rim[i], rim[(i + 1) % a]), std::max(rim[i], rim[(i + 1) % a])});
        e.push_back({std::min(hub, rim[i]), std::max(hub, rim[i])});
      }
      break;
    }
    case Family::fan: {
      // F_a = K_1 joined to P_a; a+1 vertices.
      need(a >= 1, "need path size >= 1");
      n = a + 1;
      const int hub = spec.hub_last ? n : 1;
      std::vector<int> path;
      for (int i = 1; i <= n; ++i)
        if (i != hub) path.push_back(i);
      for (int i = 0; i + 1 < a; ++i)
        e.push_back({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
      for (int i = 0; i < a; ++i) e.push_back({std::min(hub, path[i]), std::max(hub, path[i])});
      break;
    }
    case Family::complement_path: {
      FamilySpec inner = spec;
      inner.family = Family::path;
      return complement_graph(make_family(inner)).with_r(spec.r);
    }
    case Family::complement_cycle: {
      FamilySpec inner = spec;
      inner.family = Family::cycle;
      return complement_graph(make_family(inner)).with_r(spec.r);
    }
    case Family::tadpole: {
      // T_{a,b}: cycle 1..a, path a+1..a+b, bridge {a, a+1}.
      need(a >= 3 && b >= 1, "need cycle >= 3 and tail >= 1");
      n = a + b;
      for (int i = 1; i < a; ++i) e.push_back({i, i + 1});
      e.push_back({1, a});
      for (int i = a + 1; i < n; ++i) e.push_back({i, i + 1});
      e.push_back({a, a + 1});
      break;
    }
    case Family::lollipop: {
      // L_{a,b}: clique 1..a, path a+1..a+b, bridge {a, a+1}.
      need(a >= 1 && b >= 1, "need clique >= 1 and tail >= 1");
      n = a + b;
      for (int i = 1; i <= a; ++i)
        for (int j = i + 1; j <= a; ++j) e.push_back({i, j});
      for (int i = a + 1; i < n; ++i) e.push_back({i, i + 1});
      e.push_back({a, a + 1});
      break;
    }
    case Family::barbell: {
      // B_a: cliques 1..a and a+1..2a, bridge {a, a+1}.
      need(a >= 1, "need clique size >= 1");
      n = 2 * a;
      for (int i = 1; i <= a; ++i)
        for (int j = i + 1; j <= a; ++j) e.push_back({i, j});
      for (int i = a + 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
      e.push_back({a, a + 1});
      break;
    }
    case Family::complete_bipartite: {
      need(a >= 0 && b >= 0, "need both parts >= 0");
      n = a + b;
      for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= n; ++j) e.push_back({i, j});
      break;
    }
  }
  return make_graph(n, std::move(e), spec.r);
}

// "name:3" or "name:3,4" as used by the CLI's --family flag.
inline FamilySpec parse_family_spec(const std::string& text, int r = 0, bool hub_last = false) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  FamilySpec spec;
  spec.r = r;
  spec.hub_last = hub_last;
  static const std::pair<const char*, Family> kNames[] = {
      {"empty", Family::empty},
      {"path", Family::path},
      {"cycle", Family::cycle},
      {"complete", Family::complete},
      {"star", Family::star},
      {"double_star", Family::double_star},
      {"wheel", Family::wheel},
      {"fan", Family::fan},
      {"complement_path", Family::complement_path},
      {"complement_cycle", Family::complement_cycle},
      {"tadpole", Family::tadpole},
      {"lollipop", Family::lollipop},
      {"barbell", Family::barbell},
      {"complete_bipartite", Family::complete_bipartite},
  };
  bool found = false;
  for (const auto& [nm, fam] : kNames)
    if (name == nm) {
      spec.family = fam;
      found = true;
      break;
    }
  if (!found) throw parameter_error("unknown family '" + name + "'");
  if (colon == std::string::npos)
    throw parameter_error("family spec needs a size, e.g. '" + name + ":5'");
  std::string sizes = text.substr(colon + 1);
  try {
    auto comma = sizes.find(',');
    spec.a = std::stoi(sizes.substr(0, comma));
    if (comma != std::string::npos) spec.b = std::stoi(sizes.substr(comma + 1));
  } catch (const std::exception&) {
    throw parameter_error("family spec '" + text + "': sizes must be integers");
  }
  return spec;
}

// --- Composition operations --------------------------------------------------

// G1 keeps its labels; G2's vertex v becomes v + |V(G1)|. The result keeps
// G1's restricted prefix (G2's restricted vertices are no longer a prefix).
inline LabeledGraph disjoint_union(const LabeledGraph& g1, const LabeledGraph& g2) {
  std::vector<std::pair<int, int>> e = g1.edges;
  for (auto [u, v] : g2.edges) e.push_back({u + g1.n, v + g1.n});
  return make_graph(g1.n + g2.n, std::move(e), g1.r);
}

inline LabeledGraph bridge_join(const LabeledGraph& g1, int u, const LabeledGraph& g2, int v) {
  if (u < 1 || u > g1.n) throw parameter_error("bridge_join: anchor u not in G1");
  if (v < 1 || v > g2.n) throw parameter_error("bridge_join: anchor v not in G2");
  LabeledGraph g = disjoint_union(g1, g2);
  std::vector<std::pair<int, int>> e = g.edges;
  e.push_back({u, v + g1.n});
  return make_graph(g.n, std::move(e), g1.r);
}

// Identify u in G1 with v in G2. G1 keeps its labels; G2's remaining vertices
// follow in their original order.
inline LabeledGraph coalesce(const LabeledGraph& g1, int u, const LabeledGraph& g2, int v) {
  if (u < 1 || u > g1.n) throw parameter_error("coalesce: anchor u not in G1");
  if (v < 1 || v > g2.n) throw parameter_error("coalesce: anchor v not in G2");
  auto relabel = [&](int w) {
    if (w == v) return u;
    return g1.n + (w < v ? w : w - 1);
  };
  std::vector<std::pair<int, int>> e = g1.edges;
  std::set<std::pair<int, int>> seen(e.begin(), e.end());
  for (auto [a, b] : g2.edges) {
    int x = relabel(a), y = relabel(b);
    if (x > y) std::swap(x, y);
    if (seen.insert({x, y}).second) e.push_back({x, y});
  }
  return make_graph(g1.n + g2.n - 1, std::move(e), g1.r);
}

// Attach one new vertex (label n+1) to w by a pendant edge.
inline LabeledGraph add_pendant(const LabeledGraph& g, int w) {
  if (w < 1 || w > g.n) throw parameter_error("add_pendant: anchor vertex not in graph");
  std::vector<std::pair<int, int>> e = g.edges;
  e.push_back({w, g.n + 1});
  return make_graph(g.n + 1, std::move(e), g.r);
}

// Brooming: attach ell new vertices (labels n+1..n+ell), each adjacent only to w.
inline LabeledGraph add_broom(const LabeledGraph& g, int w, int ell) {
  if (w < 1 || w > g.n) throw parameter_error("add_broom: anchor vertex not in graph");
  if (ell < 0) throw parameter_error("add_broom: negative broom size");
  std::vector<std::pair<int, int>> e = g.edges;
  for (int i = 1; i <= ell; ++i) e.push_back({w, g.n + i});
  return make_graph(g.n + ell, std::move(e), g.r);
}

// Induced subgraph on V \ S with labels compacted order-preservingly.
// Surviving restricted vertices always stay a prefix under compaction, so
// r is recomputed as r - |S ∩ {1..r}|; callers may override via with_r.
inline LabeledGraph delete_vertices(const LabeledGraph& g, const std::vector<int>& s) {
  std::vector<bool> gone(static_cast<size_t>(g.n) + 1, false);
  for (int v : s) {
    if (v < 1 || v > g.n)
      throw parameter_error("delete_vertices: vertex " + std::to_string(v) + " not in graph");
    gone[static_cast<size_t>(v)] = true;
  }
  std::vector<int> newlabel(static_cast<size_t>(g.n) + 1, 0);
  int next = 0, new_r = 0;
  for (int v = 1; v <= g.n; ++v)
    if (!gone[static_cast<size_t>(v)]) {
      newlabel[static_cast<size_t>(v)] = ++next;
      if (v <= g.r) ++new_r;
    }
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges)
    if (!gone[static_cast<size_t>(u)] && !gone[static_cast<size_t>(v)])
      e.push_back({newlabel[static_cast<size_t>(u)], newlabel[static_cast<size_t>(v)]});
  return make_graph(next, std::move(e), new_r);
}

inline LabeledGraph delete_vertex(const LabeledGraph& g, int v) {
  return delete_vertices(g, {v});
}

inline LabeledGraph complement_graph(const LabeledGraph& g) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= g.n; ++u)
    for (int v = u + 1; v <= g.n; ++v)
      if (!g.has_edge(u, v)) e.push_back({u, v});
  return make_graph(g.n, std::move(e), g.r);
}

// --- JSON schema --------------------------------------------------------------
// {"n": int, "edges": [[u,v],...], "r": int}, 1-based vertices. Canonical
// output sorts each edge (u < v) and the edge list lexicographically, so
// parse(serialize(G)) round-trips byte-identically.

inline LabeledGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw parse_error("graph: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw parse_error("graph: missing integer field 'n'");
  const int n = j["n"].get<int>();
  int r = 0;
  if (j.contains("r")) {
    if (!j["r"].is_number_integer()) throw parse_error("graph: 'r' must be an integer");
    r = j["r"].get<int>();
  }
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw parse_error("graph: 'edges' must be an array");
    size_t idx = 0;
    for (const auto& item : j["edges"]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer())
        throw parse_error("graph: edges[" + std::to_string(idx) + "] must be a pair of integers");
      edges.push_back({item[0].get<int>(), item[1].get<int>()});
      ++idx;
    }
  }
  try {
    return make_graph(n, std::move(edges), r);
  } catch (const parameter_error& err) {
    throw parse_error(std::string("graph: ") + err.what());
  }
}

inline LabeledGraph parse_graph(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw parse_error(std::string("graph: malformed JSON: ") + err.what());
  }
  return graph_from_json(j);
}

inline nlohmann::json graph_to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["r"] = g.r;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges) edges.push_back(nlohmann::json::array({u, v}));
  j["edges"] = edges;
  return j;
}

inline std::string serialize_graph(const LabeledGraph& g) { return graph_to_json(g).dump(); }

}  // namespace cyclecount
