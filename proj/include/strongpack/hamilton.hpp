#pragma once

// Hamiltonian cycles in strong semicomplete digraphs and Hamiltonian
// decompositions of cycle blow-ups C_t o K_r-bar.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strongpack/digraph.hpp"

namespace strongpack {

struct HamCycle {
  std::vector<Vertex> order;

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) out.push_back({order[i], order[(i + 1) % order.size()]});
    return out;
  }

  friend bool operator==(const HamCycle&, const HamCycle&) = default;
};

struct HamDecomposition {
  std::vector<HamCycle> cycles;
};

inline bool is_hamiltonian_cycle(const Digraph& d, const HamCycle& c) {
  if (static_cast<int>(c.order.size()) != d.order() || d.order() < 2) return false;
  std::vector<char> seen(d.order(), 0);
  for (Vertex v : c.order) {
    if (!d.valid(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (const Arc& a : c.arcs())
    if (!d.has_arc(a.from, a.to)) return false;
  return true;
}

/// Every cycle Hamiltonian, cycles pairwise arc-disjoint, and together they
/// use every arc of `d`.
inline bool is_hamiltonian_decomposition(const Digraph& d, const HamDecomposition& h) {
  std::vector<char> used(d.size(), 0);
  int covered = 0;
  for (const HamCycle& c : h.cycles) {
    if (!is_hamiltonian_cycle(d, c)) return false;
    for (const Arc& a : c.arcs()) {
      const int id = d.arc_id(a.from, a.to);
      if (used[id]) return false;
      used[id] = 1;
      ++covered;
    }
  }
  return covered == d.size();
}

/// Hamiltonian cycle of a strong semicomplete digraph by cycle extension:
/// an outside vertex with an in-neighbour c_i and out-neighbour c_{i+1} on
/// the cycle is spliced in; otherwise an arc a->b from a vertex dominated by
/// the cycle to one dominating it replaces c_1 by a, b.
inline HamCycle hamilton_semicomplete(const Digraph& d) {
  const int n = d.order();
  if (n < 2) throw PreconditionError("hamilton_semicomplete: need at least two vertices");
  if (!is_semicomplete(d)) throw PreconditionError("hamilton_semicomplete: digraph is not semicomplete");
  if (!is_strong(d)) throw PreconditionError("hamilton_semicomplete: digraph is not strong");

  // Initial cycle through vertex 0: 0 -> w, then shortest path w ~> 0.
  std::vector<Vertex> cycle;
  {
    const Vertex w = d.out_neighbors(0).front();
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> queue{w};
    parent[w] = w;
    for (std::size_t qi = 0; qi < queue.size() && parent[0] < 0; ++qi)
      for (Vertex x : d.out_neighbors(queue[qi]))
        if (parent[x] < 0) {
          parent[x] = queue[qi];
          queue.push_back(x);
        }
    std::vector<Vertex> path;
    for (Vertex v = 0; v != w; v = parent[v]) path.push_back(v);
    path.push_back(w);
    std::reverse(path.begin(), path.end());  // w ... 0
    cycle.push_back(0);
    cycle.insert(cycle.end(), path.begin(), path.end() - 1);
  }

  std::vector<char> on_cycle(n, 0);
  for (Vertex v : cycle) on_cycle[v] = 1;

  while (static_cast<int>(cycle.size()) < n) {
    bool grown = false;
    for (Vertex v = 0; v < n && !grown; ++v) {
      if (on_cycle[v]) continue;
      const std::size_t k = cycle.size();
      for (std::size_t i = 0; i < k; ++i) {
        if (d.has_arc(cycle[i], v) && d.has_arc(v, cycle[(i + 1) % k])) {
          cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
          on_cycle[v] = 1;
          grown = true;
          break;
        }
      }
    }
    if (grown) continue;

    // Every outside vertex is now dominated by the whole cycle (A) or
    // dominates it (B); strongness forces an arc A -> B.
    std::vector<Vertex> dominated, dominating;
    for (Vertex v = 0; v < n; ++v) {
      if (on_cycle[v]) continue;
      if (d.has_arc(cycle[0], v)) dominated.push_back(v);
      else dominating.push_back(v);
    }
    bool replaced = false;
    for (Vertex a : dominated) {
      for (Vertex b : dominating) {
        if (!d.has_arc(a, b)) continue;
        // c_0 -> a -> b -> c_2 ... ; c_1 leaves the cycle.
        const Vertex dropped = cycle.size() > 1 ? cycle[1] : -1;
        if (cycle.size() > 1) cycle.erase(cycle.begin() + 1);
        if (dropped >= 0) on_cycle[dropped] = 0;
        cycle.insert(cycle.begin() + 1, {a, b});
        on_cycle[a] = on_cycle[b] = 1;
        replaced = true;
        break;
      }
      if (replaced) break;
    }
    if (!replaced) throw PreconditionError("hamilton_semicomplete: no extension found (input not strong?)");
  }
  return {cycle};
}

namespace detail {

/// Every single-cycle permutation of 0..r-1, in lexicographic order.
inline std::vector<std::vector<int>> full_cycles(int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  do {
    int len = 0, x = 0;
    do {
      x = p[x];
      ++len;
    } while (x != 0);
    if (len == r) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Third-layer rows for odd t and even r: cycle c maps j to
/// rho_c(j - 2c) with rho_c an r-cycle and each column a permutation.
inline std::optional<std::vector<std::vector<int>>> odd_layer_rows(int r) {
  const auto cycles = full_cycles(r);
  std::vector<std::vector<int>> rows(r, std::vector<int>(r));
  std::vector<std::vector<char>> column_used(r, std::vector<char>(r, 0));
  auto search = [&](auto&& self, int c) -> bool {
    if (c == r) return true;
    for (const auto& rho : cycles) {
      bool fits = true;
      for (int j = 0; j < r && fits; ++j) {
        const int target = rho[((j - 2 * c) % r + r) % r];
        fits = !column_used[j][target];
      }
      if (!fits) continue;
      for (int j = 0; j < r; ++j) {
        rows[c][j] = rho[((j - 2 * c) % r + r) % r];
        column_used[j][rows[c][j]] = 1;
      }
      if (self(self, c + 1)) return true;
      for (int j = 0; j < r; ++j) column_used[j][rows[c][j]] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return rows;
}

}  // namespace detail

/// Vertex (layer, j) of C_t o K_r-bar has id layer * r + j.
inline Digraph cycle_blowup(int t, int r) {
  if (t < 2 || r < 1) throw PreconditionError("cycle_blowup: need t >= 2 and r >= 1");
  Digraph d(t * r);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) d.add_arc(i * r + j, ((i + 1) % t) * r + k);
  return d;
}

/// r arc-disjoint Hamiltonian cycles covering C_t o K_r-bar.
///
/// Between layer i and i+1 cycle c follows a permutation sigma_{i,c} of the
/// layer index; for fixed i and j the map c -> sigma_{i,c}(j) is a bijection
/// (arc-disjointness and coverage), and the composite around the ring is an
/// r-cycle (Hamiltonicity). Cyclic shifts do this directly unless t is odd
/// and r is even, where the third layer comes from a small search. For r = 2
/// and t odd no decomposition exists: each cycle would need an odd number
/// of the t swap matchings while the two cycles together use exactly t.
inline HamDecomposition decompose_cycle_blowup(int t, int r) {
  if (t < 2) throw PreconditionError("decompose_cycle_blowup: need t >= 2");
  if (r < 1) throw PreconditionError("decompose_cycle_blowup: need r >= 1");
  if (t % 2 == 1 && r == 2)
    throw PreconditionError("decompose_cycle_blowup: C_" + std::to_string(t) +
                            " o K_2-bar has no Hamiltonian decomposition for odd t");

  auto mod = [r](int x) { return ((x % r) + r) % r; };
  // next[i][c][j]: layer-(i+1) index reached from (i, j) by cycle c.
  std::vector<std::vector<std::vector<int>>> next(t, std::vector<std::vector<int>>(r, std::vector<int>(r)));
  auto set_shift = [&](int layer, auto shift) {
    for (int c = 0; c < r; ++c)
      for (int j = 0; j < r; ++j) next[layer][c][j] = mod(j + shift(c));
  };

  int first_free = 0;
  if (t % 2 == 0) {
    set_shift(0, [](int c) { return c; });
    set_shift(1, [](int c) { return 1 - c; });
    first_free = 2;
  } else if (r % 2 == 1) {
    set_shift(0, [](int c) { return c; });
    set_shift(1, [](int c) { return c; });
    set_shift(2, [](int c) { return 1 - 2 * c; });
    first_free = 3;
  } else {
    set_shift(0, [](int c) { return c; });
    set_shift(1, [](int c) { return c; });
    const auto rows = detail::odd_layer_rows(r);
    if (!rows) throw PreconditionError("decompose_cycle_blowup: no layer assignment found");
    next[2] = *rows;
    first_free = 3;
  }
  // Remaining layers come in pairs whose shifts cancel.
  for (int layer = first_free; layer < t; layer += 2) {
    set_shift(layer, [](int c) { return c; });
    set_shift(layer + 1, [](int c) { return -c; });
  }

  HamDecomposition out;
  for (int c = 0; c < r; ++c) {
    HamCycle cycle;
    int layer = 0, j = 0;
    for (int step = 0; step < t * r; ++step) {
      cycle.order.push_back(layer * r + j);
      j = next[layer][c][j];
      layer = (layer + 1) % t;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

/// K<->_{a,a} = C_2 o K_a-bar, with side A = 0..a-1 and side B = a..2a-1.
inline HamDecomposition decompose_complete_bipartite_balanced(int a) {
  if (a < 1) throw PreconditionError("decompose_complete_bipartite_balanced: need a >= 1");
  return decompose_cycle_blowup(2, a);
}

}  // namespace strongpack
