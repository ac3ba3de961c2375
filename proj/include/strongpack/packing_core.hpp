#pragma once

// The Packing value type and its verifier.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "strongpack/digraph.hpp"

namespace strongpack {

enum class PackingMode { arc_disjoint, internally_disjoint };

inline const char* mode_name(PackingMode m) { return m == PackingMode::arc_disjoint ? "arc" : "internal"; }

/// Collection of arc sets, each claimed to be an S-strong subgraph of
/// `host`; a part's vertex set is the endpoints of its arcs.
struct Packing {
  Digraph host;
  TerminalSet terminals;
  PackingMode mode = PackingMode::arc_disjoint;
  std::vector<std::vector<Arc>> parts;

  std::size_t size() const noexcept { return parts.size(); }
};

struct PackingVerdict {
  bool ok = true;
  std::string clause;              // empty when ok
  int part = -1;                   // offending part, or first of the pair
  int other = -1;                  // second part of a violating pair
  std::optional<Arc> arc;          // shared or foreign arc
  std::optional<Vertex> vertex;    // missing terminal or shared non-terminal

  explicit operator bool() const noexcept { return ok; }

  std::string describe() const {
    if (ok) return "ok";
    std::ostringstream os;
    os << clause;
    if (part >= 0 && other >= 0) os << " between parts " << part << " and " << other;
    else if (part >= 0) os << " in part " << part;
    if (arc) os << " (arc " << arc->from << ">" << arc->to << ")";
    if (vertex) os << " (vertex " << *vertex << ")";
    return os.str();
  }
};

inline std::vector<Vertex> part_vertices(const std::vector<Arc>& part) {
  std::vector<Vertex> vs;
  for (const Arc& a : part) {
    vs.push_back(a.from);
    vs.push_back(a.to);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

/// True iff the arc set spans a strong subgraph on its own endpoints.
inline bool part_is_strong(const Digraph& host, const std::vector<Arc>& part) {
  const auto vs = part_vertices(part);
  if (vs.empty()) return false;
  std::vector<char> usable(host.size(), 0);
  for (const Arc& a : part) usable[host.arc_id(a.from, a.to)] = 1;
  return terminals_strongly_connected(host, vs, usable);
}

/// Checks, in order: arcs belong to the host, no duplicate arc inside a
/// part, each part contains S and is strong, parts pairwise arc-disjoint,
/// and in internal mode pairwise vertex intersections are exactly S.
inline PackingVerdict verify_packing(const Packing& p) {
  const Digraph& d = p.host;
  PackingVerdict bad;
  bad.ok = false;

  std::vector<int> owner(d.size(), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const int pi = static_cast<int>(i);
    std::vector<char> mine(d.size(), 0);
    for (const Arc& a : p.parts[i]) {
      const int id = d.arc_id(a.from, a.to);
      if (id < 0) {
        bad.clause = "arc not in host";
        bad.part = pi;
        bad.arc = a;
        return bad;
      }
      if (mine[id]) {
        bad.clause = "repeated arc";
        bad.part = pi;
        bad.arc = a;
        return bad;
      }
      mine[id] = 1;
    }
    const auto vs = part_vertices(p.parts[i]);
    for (Vertex s : p.terminals)
      if (!std::binary_search(vs.begin(), vs.end(), s)) {
        bad.clause = "missing terminal";
        bad.part = pi;
        bad.vertex = s;
        return bad;
      }
    if (!part_is_strong(d, p.parts[i])) {
      bad.clause = "not strong";
      bad.part = pi;
      return bad;
    }
    for (const Arc& a : p.parts[i]) {
      const int id = d.arc_id(a.from, a.to);
      if (owner[id] >= 0) {
        bad.clause = "arc-disjoint";
        bad.part = owner[id];
        bad.other = pi;
        bad.arc = a;
        return bad;
      }
      owner[id] = pi;
    }
  }

  if (p.mode == PackingMode::internally_disjoint) {
    std::vector<int> vowner(d.order(), -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
      for (Vertex v : part_vertices(p.parts[i])) {
        if (p.terminals.contains(v)) continue;
        if (vowner[v] >= 0) {
          bad.clause = "internal disjointness";
          bad.part = vowner[v];
          bad.other = static_cast<int>(i);
          bad.vertex = v;
          return bad;
        }
        vowner[v] = static_cast<int>(i);
      }
  }
  return {};
}

/// Packing type with arcs from `parts` relabelled through `map`
/// (old id -> new id) onto `new_host`.
inline Packing relabel_packing(const Packing& p, const Digraph& new_host, const TerminalSet& new_terminals,
                               const std::vector<Vertex>& map) {
  Packing out{new_host, new_terminals, p.mode, {}};
  for (const auto& part : p.parts) {
    std::vector<Arc> moved;
    moved.reserve(part.size());
    for (const Arc& a : part) moved.push_back({map[a.from], map[a.to]});
    out.parts.push_back(std::move(moved));
  }
  return out;
}

}  // namespace strongpack
