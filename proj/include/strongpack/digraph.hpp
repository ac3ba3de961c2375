#pragma once

// Simple loop-free digraphs on dense vertex ids, terminal sets, and the
// class predicates used as preconditions by the packing routines.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strongpack/errors.hpp"

namespace strongpack {

using Vertex = int;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline Arc reversed(Arc a) { return {a.to, a.from}; }

/// Loop-free digraph without parallel arcs. Arcs keep insertion order; the
/// position of an arc in `arcs()` is its arc id.
class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(int n)
      : n_(checked_order(n)), adjacency_(static_cast<std::size_t>(n) * n, -1), out_(n), in_(n) {}

  Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (const Arc& a : arcs) add_arc(a.from, a.to);
  }

  Digraph(int n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  /// Appends arc u->v and returns its id.
  int add_arc(Vertex u, Vertex v) {
    if (!valid(u) || !valid(v))
      throw PreconditionError("arc endpoint out of range: " + std::to_string(u) + ">" + std::to_string(v));
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    if (has_arc(u, v))
      throw PreconditionError("duplicate arc " + std::to_string(u) + ">" + std::to_string(v));
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({u, v});
    adjacency_[index(u, v)] = id;
    out_[u].push_back(v);
    in_[v].push_back(u);
    return id;
  }

  /// Adds u->v unless already present.
  void ensure_arc(Vertex u, Vertex v) {
    if (!has_arc(u, v)) add_arc(u, v);
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(arcs_.size()); }
  bool valid(Vertex v) const noexcept { return v >= 0 && v < n_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return valid(u) && valid(v) && adjacency_[index(u, v)] >= 0;
  }
  /// Arc id of u->v, or -1.
  int arc_id(Vertex u, Vertex v) const noexcept { return valid(u) && valid(v) ? adjacency_[index(u, v)] : -1; }

  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(int id) const { return arcs_.at(static_cast<std::size_t>(id)); }
  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_.at(v); }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_.at(v); }
  int out_degree(Vertex v) const { return static_cast<int>(out_.at(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_.at(v).size()); }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

 private:
  static int checked_order(int n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    return n;
  }

  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> adjacency_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Same arc set regardless of insertion order.
inline bool same_arc_set(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return std::all_of(a.arcs().begin(), a.arcs().end(), [&](const Arc& x) { return b.has_arc(x.from, x.to); });
}

/// Sorted, duplicate-free set of terminals, 2 <= |S| <= n.
class TerminalSet {
 public:
  TerminalSet() = default;

  TerminalSet(std::vector<Vertex> members, const Digraph& host) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.size() < 2) throw PreconditionError("terminal set needs at least two vertices");
    for (Vertex v : members_)
      if (!host.valid(v)) throw PreconditionError("terminal " + std::to_string(v) + " not in host");
  }

  static TerminalSet all(const Digraph& host) {
    std::vector<Vertex> v(static_cast<std::size_t>(host.order()));
    for (int i = 0; i < host.order(); ++i) v[i] = i;
    return TerminalSet(std::move(v), host);
  }

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const TerminalSet&, const TerminalSet&) = default;

 private:
  std::vector<Vertex> members_;
};

inline Digraph reverse(const Digraph& d) {
  Digraph r(d.order());
  for (const Arc& a : d.arcs()) r.add_arc(a.to, a.from);
  return r;
}

/// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
inline Digraph induced_subgraph(const Digraph& d, std::span<const Vertex> vertices) {
  std::vector<int> pos(static_cast<std::size_t>(d.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  Digraph h(static_cast<int>(vertices.size()));
  for (const Arc& a : d.arcs())
    if (pos[a.from] >= 0 && pos[a.to] >= 0) h.add_arc(pos[a.from], pos[a.to]);
  return h;
}

// ---------------------------------------------------------------------------
// Strong connectivity

/// Component index per vertex, numbered in order of first appearance by
/// vertex id. Iterative Tarjan.
inline std::vector<int> strong_component_ids(const Digraph& d) {
  const int n = d.order();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  int next_index = 0;
  int next_comp = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto& nb = d.out_neighbors(v);
      if (pos < nb.size()) {
        const Vertex w = nb[pos++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      const Vertex done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  // Renumber by smallest member so the partition is presented canonically.
  std::vector<int> relabel(next_comp, -1);
  int k = 0;
  for (Vertex v = 0; v < n; ++v)
    if (relabel[comp[v]] < 0) relabel[comp[v]] = k++;
  for (Vertex v = 0; v < n; ++v) comp[v] = relabel[comp[v]];
  return comp;
}

/// Strong components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<Vertex>> strong_components(const Digraph& d) {
  const auto comp = strong_component_ids(d);
  int count = 0;
  for (int c : comp) count = std::max(count, c + 1);
  std::vector<std::vector<Vertex>> parts(count);
  for (Vertex v = 0; v < d.order(); ++v) parts[comp[v]].push_back(v);
  return parts;
}

/// A single vertex counts as strong.
inline bool is_strong(const Digraph& d) {
  if (d.order() == 0) return false;
  return strong_components(d).size() == 1;
}

// ---------------------------------------------------------------------------
// Class predicates

inline bool is_symmetric(const Digraph& d) {
  return std::all_of(d.arcs().begin(), d.arcs().end(), [&](const Arc& a) { return d.has_arc(a.to, a.from); });
}

inline bool is_semicomplete(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v = u + 1; v < d.order(); ++v)
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
  return true;
}

inline bool underlying_connected(const Digraph& d) {
  if (d.order() == 0) return false;
  std::vector<char> seen(d.order(), 0);
  std::vector<Vertex> todo{0};
  seen[0] = 1;
  int reached = 1;
  while (!todo.empty()) {
    const Vertex v = todo.back();
    todo.pop_back();
    for (const auto* nb : {&d.out_neighbors(v), &d.in_neighbors(v)})
      for (Vertex w : *nb)
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          todo.push_back(w);
        }
  }
  return reached == d.order();
}

inline bool is_eulerian(const Digraph& d) {
  if (!underlying_connected(d)) return false;
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.out_degree(v) != d.in_degree(v)) return false;
  return true;
}

inline bool is_quasi_transitive(const Digraph& d) {
  for (Vertex y = 0; y < d.order(); ++y)
    for (Vertex x : d.in_neighbors(y))
      for (Vertex z : d.out_neighbors(y))
        if (x != z && !d.has_arc(x, z) && !d.has_arc(z, x)) return false;
  return true;
}

inline int min_semi_degree(const Digraph& d) {
  if (d.order() == 0) throw PreconditionError("min_semi_degree of the empty digraph");
  int best = d.out_degree(0);
  for (Vertex v = 0; v < d.order(); ++v) best = std::min({best, d.out_degree(v), d.in_degree(v)});
  return best;
}

/// Every vertex of `s` reaches every other using only arcs whose flag is set.
/// `usable` is indexed by arc id.
inline bool terminals_strongly_connected(const Digraph& d, std::span<const Vertex> s, std::span<const char> usable) {
  if (s.empty()) return true;
  const int n = d.order();
  std::vector<char> seen(n);
  std::vector<Vertex> todo;
  for (int dir = 0; dir < 2; ++dir) {
    std::fill(seen.begin(), seen.end(), 0);
    todo.assign(1, s[0]);
    seen[s[0]] = 1;
    while (!todo.empty()) {
      const Vertex v = todo.back();
      todo.pop_back();
      const auto& nb = dir == 0 ? d.out_neighbors(v) : d.in_neighbors(v);
      for (Vertex w : nb) {
        const int id = dir == 0 ? d.arc_id(v, w) : d.arc_id(w, v);
        if (!seen[w] && usable[id]) {
          seen[w] = 1;
          todo.push_back(w);
        }
      }
    }
    for (Vertex t : s)
      if (!seen[t]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Standard families

inline Digraph directed_cycle(int n) {
  Digraph d(n);
  for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
  return d;
}

inline Digraph directed_path(int n) {
  Digraph d(n);
  for (int i = 0; i + 1 < n; ++i) d.add_arc(i, i + 1);
  return d;
}

inline Digraph empty_digraph(int n) { return Digraph(n); }

/// Complete biorientation of K_n.
inline Digraph complete_digraph(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

/// K<->_{a,b}: side A is 0..a-1, side B is a..a+b-1.
inline Digraph complete_bipartite(int a, int b) {
  Digraph d(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      d.add_arc(i, a + j);
      d.add_arc(a + j, i);
    }
  return d;
}

/// Biorientation of an undirected edge list.
inline Digraph symmetric_from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Digraph d(n);
  for (auto [u, v] : edges) {
    d.ensure_arc(u, v);
    d.ensure_arc(v, u);
  }
  return d;
}

inline Digraph symmetric_from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return symmetric_from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

}  // namespace strongpack
