#pragma once

// Hardness-reduction gadgets as instance generators, with brute-force
// oracles for the source problems.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "strongpack/digraph.hpp"

namespace strongpack {

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<Vertex>> edges;

  /// Sorts and de-duplicates each edge; rejects empty edges and bad ids.
  void normalize() {
    if (n < 0) throw PreconditionError("hypergraph: negative vertex count");
    for (auto& e : edges) {
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      if (e.empty()) throw PreconditionError("hypergraph: empty edge");
      if (e.front() < 0 || e.back() >= n) throw PreconditionError("hypergraph: edge member out of range");
    }
  }
};

/// Bipartite graph with sides C = {0..c-1} and B = {0..b-1}; an edge is a
/// pair (c-index, b-index).
struct BipartiteGraph {
  int c = 0;
  int b = 0;
  std::vector<std::pair<int, int>> edges;

  bool adjacent(int ci, int bj) const {
    return std::find(edges.begin(), edges.end(), std::make_pair(ci, bj)) != edges.end();
  }

  void validate() const {
    if (c < 0 || b < 0) throw PreconditionError("bipartite graph: negative side size");
    for (auto [i, j] : edges)
      if (i < 0 || i >= c || j < 0 || j >= b) throw PreconditionError("bipartite graph: edge endpoint out of range");
  }
};

/// Splits an undirected graph (given as a symmetric digraph) along `in_c`;
/// rejects edges inside one side.
inline BipartiteGraph bipartite_from_sides(const Digraph& g, const std::vector<char>& in_c) {
  if (static_cast<int>(in_c.size()) != g.order()) throw PreconditionError("bipartite: side labels do not match graph");
  std::vector<int> index(g.order());
  BipartiteGraph out;
  for (Vertex v = 0; v < g.order(); ++v) index[v] = in_c[v] ? out.c++ : out.b++;
  for (const Arc& a : g.arcs()) {
    if (in_c[a.from] == in_c[a.to])
      throw PreconditionError("bipartite: edge " + std::to_string(a.from) + "-" + std::to_string(a.to) +
                              " joins two vertices of the same side");
    if (!in_c[a.from]) continue;
    const std::pair<int, int> e{index[a.from], index[a.to]};
    if (std::find(out.edges.begin(), out.edges.end(), e) == out.edges.end()) out.edges.push_back(e);
  }
  return out;
}

struct ReductionOutput {
  Digraph digraph;
  TerminalSet terminals;
  int ell = 0;
  std::vector<std::string> provenance;  // role label per generated vertex id
};

inline bool terminals_independent(const Digraph& d, const TerminalSet& s) {
  for (Vertex u : s)
    for (Vertex v : s)
      if (d.has_arc(u, v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hypergraph 2-colouring -> internally disjoint packing in a symmetric digraph

/// Vertices: V(H) keep ids, then one vertex per hyperedge, then
/// u_1..u_{ell-2}, then the root r. S = E(H) + {r}.
inline ReductionOutput hypergraph_to_issp(Hypergraph h, int ell) {
  if (ell < 2) throw PreconditionError("hypergraph_to_issp: need ell >= 2");
  h.normalize();
  if (h.edges.empty()) throw PreconditionError("hypergraph_to_issp: need at least one hyperedge");
  const int ne = static_cast<int>(h.edges.size());
  const int nu = ell - 2;
  const int edge0 = h.n, u0 = h.n + ne, root = h.n + ne + nu;
  Digraph d(root + 1);
  std::vector<std::string> roles;
  for (int x = 0; x < h.n; ++x) roles.push_back("x" + std::to_string(x));
  for (int e = 0; e < ne; ++e) roles.push_back("e" + std::to_string(e));
  for (int i = 0; i < nu; ++i) roles.push_back("u" + std::to_string(i + 1));
  roles.push_back("r");

  auto both = [&](Vertex a, Vertex b) {
    d.add_arc(a, b);
    d.add_arc(b, a);
  };
  for (int e = 0; e < ne; ++e)
    for (Vertex x : h.edges[e]) both(x, edge0 + e);
  for (int i = 0; i < nu; ++i) {
    both(root, u0 + i);
    for (int e = 0; e < ne; ++e) both(u0 + i, edge0 + e);
  }
  for (int x = 0; x < h.n; ++x) both(root, x);

  std::vector<Vertex> s;
  for (int e = 0; e < ne; ++e) s.push_back(edge0 + e);
  s.push_back(root);
  TerminalSet terminals(s, d);
  return {std::move(d), std::move(terminals), ell, std::move(roles)};
}

// ---------------------------------------------------------------------------
// Eulerian 2-linkage -> internally disjoint packing in an Eulerian digraph

/// D' adds x, y, r1, r2 and twelve arcs; D'' adds ell-2 subdivided 2-cycles
/// x z_i y z'_i x; D''' adds x_1..x_{k-2}, each joined to x by ell
/// subdivided 2-cycles x x_{i,j} x_i x'_{i,j} x. S = {x, y, x_1..x_{k-2}}.
inline ReductionOutput two_linkage_to_eulerian(const Digraph& d, Vertex s1, Vertex t1, Vertex s2, Vertex t2, int k,
                                               int ell) {
  if (k < 2 || ell < 2) throw PreconditionError("two_linkage_to_eulerian: need k >= 2 and ell >= 2");
  if (!is_eulerian(d)) throw PreconditionError("two_linkage_to_eulerian: source digraph is not Eulerian");
  for (Vertex v : {s1, t1, s2, t2})
    if (!d.valid(v)) throw PreconditionError("two_linkage_to_eulerian: terminal out of range");
  {
    std::vector<Vertex> four{s1, t1, s2, t2};
    std::sort(four.begin(), four.end());
    if (std::adjacent_find(four.begin(), four.end()) != four.end())
      throw PreconditionError("two_linkage_to_eulerian: s1, t1, s2, t2 must be distinct");
  }

  const int n = d.order();
  const int extra_z = 2 * (ell - 2);
  const int extra_x = (k - 2) * (1 + 2 * ell);
  Digraph out(n + 4 + extra_z + extra_x);
  std::vector<std::string> roles;
  for (Vertex v = 0; v < n; ++v) roles.push_back("v" + std::to_string(v));
  for (const Arc& a : d.arcs()) out.add_arc(a.from, a.to);

  const Vertex x = n, y = n + 1, r1 = n + 2, r2 = n + 3;
  roles.insert(roles.end(), {"x", "y", "r1", "r2"});
  const std::pair<Vertex, Vertex> gadget[] = {{t1, x}, {x, s1},  {t2, y},  {y, s2},  {x, s2},  {s2, x},
                                              {y, t1}, {t1, y}, {s1, r1}, {r1, t2}, {s2, r2}, {r2, t1}};
  for (auto [a, b] : gadget) out.add_arc(a, b);

  Vertex next = n + 4;
  for (int i = 1; i <= ell - 2; ++i) {
    const Vertex z = next++, zp = next++;
    roles.push_back("z" + std::to_string(i));
    roles.push_back("z'" + std::to_string(i));
    out.add_arc(x, z);
    out.add_arc(z, y);
    out.add_arc(y, zp);
    out.add_arc(zp, x);
  }

  std::vector<Vertex> s{x, y};
  for (int i = 1; i <= k - 2; ++i) {
    const Vertex xi = next++;
    roles.push_back("x" + std::to_string(i));
    s.push_back(xi);
    for (int j = 1; j <= ell; ++j) {
      const Vertex in = next++, back = next++;
      roles.push_back("x" + std::to_string(i) + "," + std::to_string(j));
      roles.push_back("x'" + std::to_string(i) + "," + std::to_string(j));
      out.add_arc(x, in);
      out.add_arc(in, xi);
      out.add_arc(xi, back);
      out.add_arc(back, x);
    }
  }
  TerminalSet terminals(s, out);
  return {std::move(out), std::move(terminals), ell, std::move(roles)};
}

// ---------------------------------------------------------------------------
// Set cover packing -> ISSP / ASSP

/// V(D) = C + B + {x}: C keeps ids 0..c-1, B is c..c+b-1, x = c+b.
/// Arcs x<->u for u in C and the biorientation of G. S = {x} + B.
inline ReductionOutput set_cover_to_issp(const BipartiteGraph& g) {
  g.validate();
  if (g.b == 0) throw PreconditionError("set_cover_to_issp: B must be nonempty");
  const Vertex x = g.c + g.b;
  Digraph d(x + 1);
  std::vector<std::string> roles;
  for (int i = 0; i < g.c; ++i) roles.push_back("c" + std::to_string(i));
  for (int j = 0; j < g.b; ++j) roles.push_back("b" + std::to_string(j));
  roles.push_back("x");
  for (int i = 0; i < g.c; ++i) {
    d.add_arc(x, i);
    d.add_arc(i, x);
  }
  for (auto [i, j] : g.edges) {
    d.ensure_arc(i, g.c + j);
    d.ensure_arc(g.c + j, i);
  }
  std::vector<Vertex> s{x};
  for (int j = 0; j < g.b; ++j) s.push_back(g.c + j);
  TerminalSet terminals(s, d);
  if (!terminals_independent(d, terminals)) throw std::logic_error("set_cover_to_issp: S is not independent");
  return {std::move(d), std::move(terminals), 0, std::move(roles)};
}

/// Each u in C splits into u- (keeps id u) and u+ (appended after x) with
/// the arc u- -> u+; v -> u- and u+ -> v for every terminal v adjacent to
/// u in the ISSP digraph. B is c..c+b-1, x = c+b, u+ = c+b+1+u.
inline ReductionOutput set_cover_to_assp(const BipartiteGraph& g) {
  g.validate();
  if (g.b == 0) throw PreconditionError("set_cover_to_assp: B must be nonempty");
  const Vertex x = g.c + g.b;
  auto plus = [&](int u) { return x + 1 + u; };
  Digraph d(x + 1 + g.c);
  std::vector<std::string> roles;
  for (int i = 0; i < g.c; ++i) roles.push_back("c" + std::to_string(i) + "-");
  for (int j = 0; j < g.b; ++j) roles.push_back("b" + std::to_string(j));
  roles.push_back("x");
  for (int i = 0; i < g.c; ++i) roles.push_back("c" + std::to_string(i) + "+");

  for (int u = 0; u < g.c; ++u) d.add_arc(u, plus(u));
  for (int u = 0; u < g.c; ++u) {
    d.add_arc(x, u);
    d.add_arc(plus(u), x);
  }
  for (auto [u, j] : g.edges) {
    d.ensure_arc(g.c + j, u);
    d.ensure_arc(plus(u), g.c + j);
  }
  std::vector<Vertex> s{x};
  for (int j = 0; j < g.b; ++j) s.push_back(g.c + j);
  TerminalSet terminals(s, d);
  if (!terminals_independent(d, terminals)) throw std::logic_error("set_cover_to_assp: S is not independent");
  return {std::move(d), std::move(terminals), 0, std::move(roles)};
}

// ---------------------------------------------------------------------------
// Source-problem oracles

/// Some red/blue colouring leaves every hyperedge bichromatic.
inline bool oracle_2colorable(Hypergraph h, int limit = 20) {
  h.normalize();
  if (h.n > limit) throw SizeLimitError("oracle_2colorable: too many vertices");
  const std::uint64_t total = std::uint64_t{1} << h.n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool good = true;
    for (const auto& e : h.edges) {
      bool red = false, blue = false;
      for (Vertex v : e) ((mask >> v) & 1 ? red : blue) = true;
      if (!(red && blue)) {
        good = false;
        break;
      }
    }
    if (good) return true;
  }
  return false;
}

/// Vertex-disjoint s1->t1 and s2->t2 paths exist. Enumerates simple
/// s1->t1 paths avoiding s2, t2 and searches for the second path in the rest.
inline bool oracle_two_linkage(const Digraph& d, Vertex s1, Vertex t1, Vertex s2, Vertex t2, int limit = 16) {
  for (Vertex v : {s1, t1, s2, t2})
    if (!d.valid(v)) throw PreconditionError("oracle_two_linkage: terminal out of range");
  {
    std::vector<Vertex> four{s1, t1, s2, t2};
    std::sort(four.begin(), four.end());
    if (std::adjacent_find(four.begin(), four.end()) != four.end())
      throw PreconditionError("oracle_two_linkage: terminals must be distinct");
  }
  if (d.order() > limit) throw SizeLimitError("oracle_two_linkage: too many vertices");

  std::vector<char> blocked(d.order(), 0);
  auto second_path = [&]() {
    std::vector<char> seen(d.order(), 0);
    std::vector<Vertex> todo{s2};
    seen[s2] = 1;
    while (!todo.empty()) {
      const Vertex v = todo.back();
      todo.pop_back();
      if (v == t2) return true;
      for (Vertex w : d.out_neighbors(v))
        if (!seen[w] && !blocked[w]) {
          seen[w] = 1;
          todo.push_back(w);
        }
    }
    return false;
  };
  auto walk = [&](auto&& self, Vertex v) -> bool {
    if (v == t1) return second_path();
    for (Vertex w : d.out_neighbors(v)) {
      if (blocked[w] || w == s2 || w == t2) continue;
      blocked[w] = 1;
      if (self(self, w)) return true;
      blocked[w] = 0;
    }
    return false;
  };
  blocked[s1] = 1;
  return walk(walk, s1);
}

/// Largest number of pairwise disjoint subsets of C that each dominate B.
/// Empty B: every vertex of C is its own cover, giving |C|.
inline int oracle_set_cover_packing(const BipartiteGraph& g, int limit = 12) {
  g.validate();
  if (g.c > limit) throw SizeLimitError("oracle_set_cover_packing: C too large");
  if (g.b == 0) return g.c;
  std::vector<std::uint32_t> covers(g.c, 0);  // B-neighbourhood of each C vertex
  for (auto [i, j] : g.edges) covers[i] |= std::uint32_t{1} << j;
  const std::uint32_t full = (g.b >= 32) ? ~0u : ((std::uint32_t{1} << g.b) - 1);

  // Assign C vertices to at most `target` covers; unassigned is allowed.
  auto feasible = [&](int target) {
    std::vector<std::uint32_t> got(target, 0);
    auto place = [&](auto&& self, int u, int opened) -> bool {
      if (std::all_of(got.begin(), got.end(), [&](std::uint32_t m) { return m == full; })) return true;
      if (u == g.c) return false;
      for (int k = 0; k < std::min(opened + 1, target); ++k) {
        const std::uint32_t before = got[k];
        if (before == full) continue;
        got[k] |= covers[u];
        if (self(self, u + 1, std::max(opened, k + 1))) return true;
        got[k] = before;
      }
      return self(self, u + 1, opened);
    };
    return place(place, 0, 0);
  };
  int best = 0;
  while (best < g.c && feasible(best + 1)) ++best;
  return best;
}

}  // namespace strongpack
