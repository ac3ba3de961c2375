#pragma once

// Slow reference implementations used only by the tests. None of them share
// code with the library searches beyond the Digraph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "strongpack/digraph.hpp"

namespace oracle {

using strongpack::Arc;
using strongpack::Digraph;
using strongpack::Vertex;

/// reach[u][v] by Floyd-Warshall style closure.
inline std::vector<std::vector<char>> reachability(const Digraph& d) {
  const int n = d.order();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) r[v][v] = 1;
  for (const Arc& a : d.arcs()) r[a.from][a.to] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

/// Arc subset given by `mask` over arc ids strongly connects every vertex of
/// s (paths may leave s).
inline bool subset_connects(const Digraph& d, std::uint64_t mask, const std::vector<Vertex>& s) {
  Digraph sub(d.order());
  for (int i = 0; i < d.size(); ++i)
    if (mask >> i & 1) sub.add_arc(d.arc(i).from, d.arc(i).to);
  const auto r = reachability(sub);
  for (Vertex u : s)
    for (Vertex v : s)
      if (!r[u][v]) return false;
  return true;
}

/// Vertices touched by the arcs in `mask`.
inline std::uint64_t touched(const Digraph& d, std::uint64_t mask) {
  std::uint64_t vs = 0;
  for (int i = 0; i < d.size(); ++i)
    if (mask >> i & 1) vs |= (std::uint64_t{1} << d.arc(i).from) | (std::uint64_t{1} << d.arc(i).to);
  return vs;
}

/// Largest number of disjoint S-strong arc sets, by enumerating every
/// assignment of arcs to {unused, 0..ell-1}. Only for tiny digraphs.
inline int packing_number(const Digraph& d, const std::vector<Vertex>& s, bool internal) {
  const int m = d.size();
  std::uint64_t term = 0;
  for (Vertex v : s) term |= std::uint64_t{1} << v;
  int cap = m;
  for (Vertex v : s) cap = std::min({cap, d.out_degree(v), d.in_degree(v)});
  int best = 0;
  for (int ell = 1; ell <= cap; ++ell) {
    std::vector<int> colour(m, 0);  // 0 = unused, c = class c-1
    bool found = false;
    while (!found) {
      std::vector<std::uint64_t> masks(ell, 0);
      for (int i = 0; i < m; ++i)
        if (colour[i]) masks[colour[i] - 1] |= std::uint64_t{1} << i;
      bool ok = true;
      for (int c = 0; c < ell && ok; ++c) ok = subset_connects(d, masks[c], s);
      if (ok && internal)
        for (int c = 0; c < ell && ok; ++c)
          for (int e = c + 1; e < ell && ok; ++e) ok = ((touched(d, masks[c]) & touched(d, masks[e])) & ~term) == 0;
      if (ok) {
        found = true;
        break;
      }
      int i = 0;
      while (i < m && colour[i] == ell) colour[i++] = 0;
      if (i == m) break;
      ++colour[i];
    }
    if (!found) break;
    best = ell;
  }
  return best;
}

/// Min over vertex sets X splitting S (some terminal in X, some outside) of
/// the number of arcs leaving X.
inline int subset_min_strong_cut(const Digraph& d, const std::vector<Vertex>& s) {
  const int n = d.order();
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t x = 1; x + 1 < (1u << n); ++x) {
    bool in = false, out = false;
    for (Vertex v : s) (x >> v & 1 ? in : out) = true;
    if (!in || !out) continue;
    int leaving = 0;
    for (const Arc& a : d.arcs()) leaving += (x >> a.from & 1) && !(x >> a.to & 1);
    best = std::min(best, leaving);
  }
  return best;
}

/// Same minimum for the underlying undirected graph of a symmetric digraph:
/// edges crossing X.
inline int subset_min_steiner_cut(const Digraph& g, const std::vector<Vertex>& s) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t x = 1; x + 1 < (1u << n); ++x) {
    bool in = false, out = false;
    for (Vertex v : s) (x >> v & 1 ? in : out) = true;
    if (!in || !out) continue;
    int crossing = 0;
    for (const Arc& a : g.arcs())
      if (a.from < a.to) crossing += ((x >> a.from) & 1) != ((x >> a.to) & 1);
    best = std::min(best, crossing);
  }
  return best;
}

/// Every Hamiltonian cycle of d as a vertex sequence starting at 0.
inline std::vector<std::vector<Vertex>> hamiltonian_cycles(const Digraph& d) {
  const int n = d.order();
  std::vector<std::vector<Vertex>> out;
  if (n < 2) return out;
  std::vector<Vertex> path{0};
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::function<void()> grow = [&] {
    const Vertex v = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (d.has_arc(v, 0)) out.push_back(path);
      return;
    }
    for (Vertex w : d.out_neighbors(v))
      if (!used[w]) {
        used[w] = 1;
        path.push_back(w);
        grow();
        path.pop_back();
        used[w] = 0;
      }
  };
  grow();
  return out;
}

/// Whether the arcs of d split into r disjoint Hamiltonian cycles.
inline bool has_hamiltonian_decomposition(const Digraph& d, int r) {
  std::vector<std::set<std::pair<Vertex, Vertex>>> cycles;
  for (const auto& c : hamiltonian_cycles(d)) {
    std::set<std::pair<Vertex, Vertex>> arcs;
    for (std::size_t i = 0; i < c.size(); ++i) arcs.insert({c[i], c[(i + 1) % c.size()]});
    cycles.push_back(std::move(arcs));
  }
  std::set<std::pair<Vertex, Vertex>> used;
  std::function<bool(std::size_t, int)> pick = [&](std::size_t from, int left) {
    if (left == 0) return static_cast<int>(used.size()) == d.size();
    for (std::size_t i = from; i < cycles.size(); ++i) {
      if (std::any_of(cycles[i].begin(), cycles[i].end(), [&](const auto& a) { return used.count(a) > 0; })) continue;
      used.insert(cycles[i].begin(), cycles[i].end());
      if (pick(i + 1, left - 1)) return true;
      for (const auto& a : cycles[i]) used.erase(a);
    }
    return false;
  };
  return pick(0, r);
}

/// Augmenting-path max flow on an explicit capacity matrix.
inline int max_flow(std::vector<std::vector<int>> cap, int s, int t) {
  const int n = static_cast<int>(cap.size());
  int flow = 0;
  while (true) {
    std::vector<int> parent(n, -1);
    parent[s] = s;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size() && parent[t] < 0; ++i)
      for (int w = 0; w < n; ++w)
        if (parent[w] < 0 && cap[queue[i]][w] > 0) {
          parent[w] = queue[i];
          queue.push_back(w);
        }
    if (parent[t] < 0) return flow;
    for (int v = t; v != s; v = parent[v]) {
      --cap[parent[v]][v];
      ++cap[v][parent[v]];
    }
    ++flow;
  }
}

/// Undirected u-v edge connectivity of a symmetric digraph.
inline int edge_connectivity(const Digraph& g, Vertex u, Vertex v) {
  std::vector<std::vector<int>> cap(g.order(), std::vector<int>(g.order(), 0));
  for (const Arc& a : g.arcs()) cap[a.from][a.to] = 1;
  return max_flow(cap, u, v);
}

/// Internally vertex-disjoint u-v paths in the underlying graph of a
/// symmetric digraph (the edge uv, if present, counts as one path).
inline int vertex_disjoint_paths(const Digraph& g, Vertex u, Vertex v) {
  const int n = g.order();
  const int big = n + 1;
  std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
  for (int x = 0; x < n; ++x) cap[2 * x][2 * x + 1] = (x == u || x == v) ? big : 1;
  for (const Arc& a : g.arcs()) cap[2 * a.from + 1][2 * a.to] = 1;
  return max_flow(cap, 2 * u, 2 * v + 1);
}

}  // namespace oracle
