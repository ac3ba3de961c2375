#pragma once

// Constructive arc-disjoint packings in complete bipartite digraphs and in
// compositions with a strong symmetric or strong semicomplete outer digraph,
// plus recognition of the three compositions that have no strong arc
// decomposition.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongpack/composition.hpp"
#include "strongpack/digraph.hpp"
#include "strongpack/exact.hpp"
#include "strongpack/hamilton.hpp"
#include "strongpack/packing_core.hpp"

namespace strongpack {

// ---------------------------------------------------------------------------
// Isomorphism and the exceptional family

/// Bijection `map` with u->v in a iff map[u]->map[v] in b, or nullopt.
/// Backtracking with (in, out) degree pruning; meant for a handful of vertices.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& a, const Digraph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return std::nullopt;
  auto degrees = [](const Digraph& d, Vertex v) { return std::make_pair(d.in_degree(v), d.out_degree(v)); };
  {
    std::vector<std::pair<int, int>> da, db;
    for (Vertex v = 0; v < n; ++v) {
      da.push_back(degrees(a, v));
      db.push_back(degrees(b, v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
  }
  std::vector<Vertex> map(n, -1);
  std::vector<char> taken(n, 0);
  auto extend = [&](auto&& self, Vertex u) -> bool {
    if (u == n) return true;
    for (Vertex v = 0; v < n; ++v) {
      if (taken[v] || degrees(a, u) != degrees(b, v)) continue;
      bool fits = true;
      for (Vertex w = 0; w < u && fits; ++w)
        fits = a.has_arc(u, w) == b.has_arc(v, map[w]) && a.has_arc(w, u) == b.has_arc(map[w], v);
      if (!fits) continue;
      map[u] = v;
      taken[v] = 1;
      if (self(self, u + 1)) return true;
      taken[v] = 0;
      map[u] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

/// C_3[K2-bar, K2-bar, K2-bar], C_3[P2, K2-bar, K2-bar], C_3[K2-bar, K2-bar, K3-bar].
inline const std::array<Digraph, 3>& q0_members() {
  static const std::array<Digraph, 3> members = [] {
    const Digraph c3 = directed_cycle(3);
    const Digraph k2 = empty_digraph(2), k3 = empty_digraph(3), p2 = directed_path(2);
    return std::array<Digraph, 3>{compose(CompositionSpec(c3, {k2, k2, k2})),
                                  compose(CompositionSpec(c3, {p2, k2, k2})),
                                  compose(CompositionSpec(c3, {k2, k2, k3}))};
  }();
  return members;
}

inline const char* q0_member_name(int index) {
  static const char* names[] = {"C3[K2-bar,K2-bar,K2-bar]", "C3[P2,K2-bar,K2-bar]", "C3[K2-bar,K2-bar,K3-bar]"};
  return names[index];
}

struct Q0Verdict {
  bool member = false;
  int which = -1;                        // index into q0_members()
  std::vector<Vertex> isomorphism;       // d's vertex -> member's vertex

  explicit operator bool() const noexcept { return member; }
};

inline Q0Verdict is_in_Q0(const Digraph& d) {
  if (d.order() != 6 && d.order() != 7) return {};
  const auto& members = q0_members();
  for (int i = 0; i < 3; ++i)
    if (auto iso = find_isomorphism(d, members[i])) return {true, i, std::move(*iso)};
  return {};
}

/// Thrown when a packing routine receives a member of the exceptional family.
class Q0Error : public PreconditionError {
 public:
  explicit Q0Error(Q0Verdict v)
      : PreconditionError(std::string("composition is in Q0 (isomorphic to ") + q0_member_name(v.which) +
                          "); it has no pair of arc-disjoint strong spanning subgraphs"),
        verdict_(std::move(v)) {}

  const Q0Verdict& verdict() const noexcept { return verdict_; }

 private:
  Q0Verdict verdict_;
};

// ---------------------------------------------------------------------------
// Complete bipartite digraphs

namespace detail {

/// min(|small|, |large|) arc-disjoint strong spanning subgraphs of the
/// complete bipartite digraph between `small` and `large` (|small| <= |large|):
/// a Hamiltonian decomposition of the balanced part, then part i also takes
/// both arcs between small[i] and every large[j], j >= |small|.
inline std::vector<std::vector<Arc>> bipartite_parts(const std::vector<Vertex>& small, const std::vector<Vertex>& large) {
  const int a = static_cast<int>(small.size());
  const int b = static_cast<int>(large.size());
  const HamDecomposition h = decompose_complete_bipartite_balanced(a);
  auto label = [&](Vertex x) { return x < a ? small[x] : large[x - a]; };
  std::vector<std::vector<Arc>> parts;
  for (int i = 0; i < a; ++i) {
    std::vector<Arc> part;
    for (const Arc& arc : h.cycles[i].arcs()) part.push_back({label(arc.from), label(arc.to)});
    for (int j = a; j < b; ++j) {
      part.push_back({small[i], large[j]});
      part.push_back({large[j], small[i]});
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

inline void self_check(const Packing& p, const char* who) {
  if (auto v = verify_packing(p); !v)
    throw std::logic_error(std::string(who) + " produced an invalid packing: " + v.describe());
}

}  // namespace detail

/// a arc-disjoint strong spanning subgraphs of K<->_{a,b} (sides 0..a-1 and
/// a..a+b-1), which are S-strong for every S.
inline Packing pack_bipartite(int a, int b, std::optional<TerminalSet> terminals = std::nullopt) {
  if (a < 1) throw PreconditionError("pack_bipartite: need a >= 1");
  if (a > b) throw PreconditionError("pack_bipartite: need a <= b (orient the smaller side first)");
  Digraph host = complete_bipartite(a, b);
  std::vector<Vertex> small(a), large(b);
  for (int i = 0; i < a; ++i) small[i] = i;
  for (int j = 0; j < b; ++j) large[j] = a + j;
  TerminalSet s = terminals ? *terminals : TerminalSet::all(host);
  Packing p{std::move(host), std::move(s), PackingMode::arc_disjoint, detail::bipartite_parts(small, large)};
  detail::self_check(p, "pack_bipartite");
  return p;
}

/// Sides of a complete bipartite digraph K<->_{a,b} (smaller side first), or
/// nullopt.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> complete_bipartite_sides(const Digraph& d) {
  const int n = d.order();
  if (n < 2 || !is_symmetric(d)) return std::nullopt;
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    if (s != 0) return std::nullopt;  // disconnected
    side[s] = 0;
    std::vector<Vertex> todo{s};
    while (!todo.empty()) {
      const Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w : d.out_neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          todo.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Vertex> x, y;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? x : y).push_back(v);
  if (d.size() != 2 * static_cast<int>(x.size() * y.size())) return std::nullopt;
  if (x.size() > y.size()) std::swap(x, y);
  return std::make_pair(x, y);
}

// ---------------------------------------------------------------------------
// Compositions

/// n0 arc-disjoint strong spanning subgraphs of Q = D[H_1..H_t] for strong
/// symmetric D. Inner arcs are dropped; each outer 2-cycle {p, q}, taken in
/// lexicographic order, contributes a bipartite packing of its two layers
/// (the smaller layer, ties to the lower index, plays the small side), and
/// part s is the union of the s-th subgraphs.
inline Packing pack_symmetric_composition(const CompositionSpec& spec, const TerminalSet& s) {
  const Digraph& outer = spec.outer();
  if (!is_symmetric(outer)) throw PreconditionError("pack_symmetric_composition: outer digraph is not symmetric");
  if (!is_strong(outer)) throw PreconditionError("pack_symmetric_composition: outer digraph is not strong");
  Digraph q = compose(spec);
  for (Vertex v : s)
    if (!q.valid(v)) throw PreconditionError("pack_symmetric_composition: terminal outside the composition");

  const int n0 = spec.n0();
  std::vector<std::vector<Arc>> parts(n0);
  for (int p = 0; p < spec.t(); ++p)
    for (int r = p + 1; r < spec.t(); ++r) {
      if (!outer.has_arc(p, r)) continue;
      const bool p_small = spec.inner_order(p) <= spec.inner_order(r);
      const auto sub = p_small ? detail::bipartite_parts(spec.layer(p), spec.layer(r))
                               : detail::bipartite_parts(spec.layer(r), spec.layer(p));
      for (int k = 0; k < n0; ++k) parts[k].insert(parts[k].end(), sub[k].begin(), sub[k].end());
    }
  Packing out{std::move(q), s, PackingMode::arc_disjoint, std::move(parts)};
  detail::self_check(out, "pack_symmetric_composition");
  return out;
}

/// n0 arc-disjoint strong spanning subgraphs of Q = D[H_1..H_t] for strong
/// semicomplete D with Q outside Q0.
///
/// n0 = 1: Q itself. n0 = 2: exhaustive search for a strong arc
/// decomposition. n0 >= 3: along a Hamiltonian cycle c_0..c_{t-1} of D the
/// first n0 vertices of each layer span C_t o K_n0-bar, whose Hamiltonian
/// cycles give the parts; each remaining vertex v of layer c_i joins part k
/// through the arcs (c_{i-1}, k) -> v and v -> (c_{i+1}, k).
inline Packing pack_semicomplete_composition(const CompositionSpec& spec, const TerminalSet& s) {
  const Digraph& outer = spec.outer();
  if (!is_semicomplete(outer)) throw PreconditionError("pack_semicomplete_composition: outer digraph is not semicomplete");
  if (!is_strong(outer)) throw PreconditionError("pack_semicomplete_composition: outer digraph is not strong");
  Digraph q = compose(spec);
  for (Vertex v : s)
    if (!q.valid(v)) throw PreconditionError("pack_semicomplete_composition: terminal outside the composition");
  if (auto verdict = is_in_Q0(q)) throw Q0Error(std::move(verdict));

  const int n0 = spec.n0();
  std::vector<std::vector<Arc>> parts;
  if (n0 == 1) {
    parts.push_back(q.arcs());
  } else if (n0 == 2) {
    auto found = find_strong_arc_decomposition(q, ExactLimits::unbounded());
    if (!found) throw std::logic_error("pack_semicomplete_composition: no strong arc decomposition found outside Q0");
    parts.push_back(std::move(found->first));
    parts.push_back(std::move(found->second));
  } else {
    const HamCycle ring = hamilton_semicomplete(outer);
    const int t = spec.t();
    const HamDecomposition blowup = decompose_cycle_blowup(t, n0);
    auto vertex = [&](Vertex blown) { return spec.flat(ring.order[blown / n0], blown % n0); };
    for (const HamCycle& c : blowup.cycles) {
      std::vector<Arc> part;
      for (const Arc& a : c.arcs()) part.push_back({vertex(a.from), vertex(a.to)});
      parts.push_back(std::move(part));
    }
    for (int i = 0; i < t; ++i) {
      const int layer = ring.order[i];
      const int pred = ring.order[(i + t - 1) % t];
      const int succ = ring.order[(i + 1) % t];
      for (int j = n0; j < spec.inner_order(layer); ++j) {
        const Vertex v = spec.flat(layer, j);
        for (int k = 0; k < n0; ++k) {
          parts[k].push_back({spec.flat(pred, k), v});
          parts[k].push_back({v, spec.flat(succ, k)});
        }
      }
    }
  }
  Packing out{std::move(q), s, PackingMode::arc_disjoint, std::move(parts)};
  detail::self_check(out, "pack_semicomplete_composition");
  return out;
}

/// n0 arc-disjoint S-strong subgraphs of a strong quasi-transitive digraph
/// outside Q0, via its canonical decomposition. Arcs use d's own ids.
inline Packing pack_quasi_transitive(const Digraph& d, const TerminalSet& s) {
  if (auto verdict = is_in_Q0(d)) throw Q0Error(std::move(verdict));
  const CanonicalDecomposition dec = canonical_decomposition_strong_qt(d);
  std::vector<Vertex> to_flat(d.order());
  for (std::size_t f = 0; f < dec.original.size(); ++f) to_flat[dec.original[f]] = static_cast<Vertex>(f);
  const Digraph q = compose(dec.spec);
  std::vector<Vertex> flat_terminals;
  for (Vertex v : s) flat_terminals.push_back(to_flat[v]);
  const Packing flat = pack_semicomplete_composition(dec.spec, TerminalSet(flat_terminals, q));
  Packing out = relabel_packing(flat, d, s, dec.original);
  detail::self_check(out, "pack_quasi_transitive");
  return out;
}

}  // namespace strongpack
