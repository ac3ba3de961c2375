#pragma once

// Exhaustive oracles: lambda_S, kappa_S, strong arc decompositions, and the
// S-strong-subgraph-cut / S-Steiner-cut quantities.

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "strongpack/digraph.hpp"
#include "strongpack/packing_core.hpp"

namespace strongpack {

/// Inputs larger than this are refused by the exhaustive searches.
struct ExactLimits {
  int max_vertices = 10;
  int max_arcs = 26;

  static constexpr ExactLimits unbounded() {
    return {std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  }
};

inline void check_limits(const Digraph& d, const ExactLimits& limits) {
  if (d.order() > limits.max_vertices || d.size() > limits.max_arcs)
    throw SizeLimitError("instance with " + std::to_string(d.order()) + " vertices and " + std::to_string(d.size()) +
                         " arcs exceeds the exhaustive limit (" + std::to_string(limits.max_vertices) + " vertices / " +
                         std::to_string(limits.max_arcs) + " arcs)");
}

namespace detail {

/// Backtracking over arc colourings with `ell` classes (an arc may stay
/// uncoloured). Arcs are taken grouped by tail, terminal tails first. A class
/// is abandoned as soon as its coloured plus still free arcs no longer
/// connect S strongly, or some terminal has fewer free out- (in-) arcs than
/// open classes still missing one there. A class whose coloured arcs already
/// connect S is closed and receives no further arcs. Classes are opened in
/// order, which removes colour permutations. In internal mode a non-terminal
/// vertex belongs to the first class that colours an arc at it.
class PackingSearch {
 public:
  PackingSearch(const Digraph& d, const TerminalSet& s, PackingMode mode, int ell)
      : d_(d), s_(s), mode_(mode), ell_(ell),
        state_(d.size(), kFree), owner_(d.order(), -1), owner_count_(d.order(), 0),
        closed_(ell, 0), usable_(d.size(), 0), is_terminal_(d.order(), 0),
        free_out_(d.order(), 0), free_in_(d.order(), 0),
        have_out_(static_cast<std::size_t>(ell) * d.order(), 0), have_in_(static_cast<std::size_t>(ell) * d.order(), 0) {
    for (Vertex v : s_) is_terminal_[v] = 1;
    order_.resize(d.size());
    for (int i = 0; i < d.size(); ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      const Arc& a = d_.arc(x);
      const Arc& b = d_.arc(y);
      return std::make_tuple(!is_terminal_[a.from], a.from, a.to) < std::make_tuple(!is_terminal_[b.from], b.from, b.to);
    });
    for (const Arc& a : d_.arcs()) {
      ++free_out_[a.from];
      ++free_in_[a.to];
    }
  }

  std::optional<Packing> run() {
    if (ell_ <= 0) return Packing{d_, s_, mode_, {}};
    if (!all_alive() || !search(0, 0)) return std::nullopt;
    Packing p{d_, s_, mode_, {}};
    for (int c = 0; c < ell_; ++c) p.parts.push_back(extract(c));
    return p;
  }

 private:
  static constexpr int kFree = -2;
  static constexpr int kUnused = -1;

  bool vertex_allows(Vertex v, int c) const { return is_terminal_[v] || owner_[v] == -1 || owner_[v] == c; }

  bool allowed(int arc, int c) const {
    if (mode_ == PackingMode::arc_disjoint) return true;
    const Arc& a = d_.arc(arc);
    return vertex_allows(a.from, c) && vertex_allows(a.to, c);
  }

  bool connected_with(int c, bool include_free) {
    for (int i = 0; i < d_.size(); ++i)
      usable_[i] = state_[i] == c || (include_free && state_[i] == kFree && allowed(i, c));
    return terminals_strongly_connected(d_, s_.members(), usable_);
  }

  bool degrees_ok() const {
    for (Vertex v : s_) {
      int need_out = 0, need_in = 0;
      for (int c = 0; c < ell_; ++c) {
        if (closed_[c]) continue;
        need_out += have_out_[slot(c, v)] == 0;
        need_in += have_in_[slot(c, v)] == 0;
      }
      if (need_out > free_out_[v] || need_in > free_in_[v]) return false;
    }
    return true;
  }

  bool all_alive() {
    if (!degrees_ok()) return false;
    for (int c = 0; c < ell_; ++c)
      if (!closed_[c] && !connected_with(c, true)) return false;
    return true;
  }

  std::size_t slot(int c, Vertex v) const { return static_cast<std::size_t>(c) * d_.order() + v; }

  void take(int arc, int c) {
    const Arc& a = d_.arc(arc);
    state_[arc] = c;
    --free_out_[a.from];
    --free_in_[a.to];
    if (c >= 0) {
      ++have_out_[slot(c, a.from)];
      ++have_in_[slot(c, a.to)];
      claim(a, c, +1);
    }
  }

  void give_back(int arc) {
    const Arc& a = d_.arc(arc);
    const int c = state_[arc];
    if (c >= 0) {
      --have_out_[slot(c, a.from)];
      --have_in_[slot(c, a.to)];
      claim(a, c, -1);
    }
    state_[arc] = kFree;
    ++free_out_[a.from];
    ++free_in_[a.to];
  }

  void claim(const Arc& a, int c, int delta) {
    if (mode_ != PackingMode::internally_disjoint) return;
    for (Vertex v : {a.from, a.to}) {
      if (is_terminal_[v]) continue;
      owner_count_[v] += delta;
      owner_[v] = owner_count_[v] > 0 ? c : -1;
    }
  }

  bool search(std::size_t idx, int opened) {
    if (std::all_of(closed_.begin(), closed_.end(), [](char x) { return x != 0; })) return true;
    if (idx == order_.size()) return false;
    const int arc = order_[idx];

    for (int c = 0; c < std::min(opened + 1, ell_); ++c) {
      if (closed_[c] || !allowed(arc, c)) continue;
      take(arc, c);
      closed_[c] = connected_with(c, false);
      if (all_alive() && search(idx + 1, std::max(opened, c + 1))) return true;
      closed_[c] = 0;
      give_back(arc);
    }
    take(arc, kUnused);
    if (all_alive() && search(idx + 1, opened)) return true;
    give_back(arc);
    return false;
  }

  /// Arcs of class c inside the strong component that holds S.
  std::vector<Arc> extract(int c) {
    Digraph sub(d_.order());
    for (int i = 0; i < d_.size(); ++i)
      if (state_[i] == c) sub.add_arc(d_.arc(i).from, d_.arc(i).to);
    const auto comp = strong_component_ids(sub);
    const int target = comp[s_.members().front()];
    std::vector<Arc> out;
    for (int i = 0; i < d_.size(); ++i) {
      const Arc& x = d_.arc(i);
      if (state_[i] == c && comp[x.from] == target && comp[x.to] == target) out.push_back(x);
    }
    return out;
  }

  const Digraph& d_;
  const TerminalSet& s_;
  PackingMode mode_;
  int ell_;
  std::vector<int> state_;
  std::vector<int> owner_;
  std::vector<int> owner_count_;
  std::vector<char> closed_;
  std::vector<char> usable_;
  std::vector<char> is_terminal_;
  std::vector<int> free_out_;
  std::vector<int> free_in_;
  std::vector<int> have_out_;
  std::vector<int> have_in_;
  std::vector<int> order_;
};

inline int terminal_degree_bound(const Digraph& d, const TerminalSet& s) {
  int bound = std::numeric_limits<int>::max();
  for (Vertex v : s) bound = std::min({bound, d.out_degree(v), d.in_degree(v)});
  return bound;
}

}  // namespace detail

/// `ell` pairwise disjoint (in `mode`) S-strong subgraphs, or nullopt.
inline std::optional<Packing> find_packing(const Digraph& d, const TerminalSet& s, PackingMode mode, int ell,
                                           const ExactLimits& limits = {}) {
  check_limits(d, limits);
  if (ell > detail::terminal_degree_bound(d, s)) return std::nullopt;
  return detail::PackingSearch(d, s, mode, ell).run();
}

inline bool lambda_at_least(const Digraph& d, const TerminalSet& s, int ell, const ExactLimits& limits = {}) {
  return find_packing(d, s, PackingMode::arc_disjoint, ell, limits).has_value();
}

inline bool kappa_at_least(const Digraph& d, const TerminalSet& s, int ell, const ExactLimits& limits = {}) {
  return find_packing(d, s, PackingMode::internally_disjoint, ell, limits).has_value();
}

struct ExactResult {
  int value = 0;
  Packing packing;
};

namespace detail {

inline ExactResult exact_packing_number(const Digraph& d, const TerminalSet& s, PackingMode mode,
                                        const ExactLimits& limits) {
  check_limits(d, limits);
  ExactResult best{0, Packing{d, s, mode, {}}};
  for (int ell = 1;; ++ell) {
    auto p = find_packing(d, s, mode, ell, limits);
    if (!p) return best;
    best.value = ell;
    best.packing = std::move(*p);
  }
}

}  // namespace detail

/// lambda_S(d) with an optimal arc-disjoint packing. 0 when S does not lie
/// in a single strong component.
inline ExactResult exact_lambda_S(const Digraph& d, const TerminalSet& s, const ExactLimits& limits = {}) {
  return detail::exact_packing_number(d, s, PackingMode::arc_disjoint, limits);
}

inline ExactResult exact_kappa_S(const Digraph& d, const TerminalSet& s, const ExactLimits& limits = {}) {
  return detail::exact_packing_number(d, s, PackingMode::internally_disjoint, limits);
}

/// Two arc-disjoint strong spanning subgraphs, if any.
inline std::optional<std::pair<std::vector<Arc>, std::vector<Arc>>> find_strong_arc_decomposition(
    const Digraph& d, const ExactLimits& limits = {}) {
  if (d.order() < 2) throw PreconditionError("strong arc decomposition: need at least two vertices");
  auto p = find_packing(d, TerminalSet::all(d), PackingMode::arc_disjoint, 2, limits);
  if (!p) return std::nullopt;
  return std::make_pair(p->parts[0], p->parts[1]);
}

inline bool has_strong_arc_decomposition(const Digraph& d, const ExactLimits& limits = {}) {
  return find_strong_arc_decomposition(d, limits).has_value();
}

/// lambda_k(d): minimum of lambda_S over all k-subsets S.
inline int exact_lambda_k(const Digraph& d, int k, const ExactLimits& limits = {}) {
  const int n = d.order();
  if (k < 2 || k > n) throw PreconditionError("lambda_k: need 2 <= k <= n");
  check_limits(d, limits);
  int best = std::numeric_limits<int>::max();
  std::vector<char> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v)
      if (pick[v]) members.push_back(v);
    best = std::min(best, exact_lambda_S(d, TerminalSet(members, d), limits).value);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Cuts

/// Arc set whose removal leaves no path from `source` to `target`.
struct CutCertificate {
  std::vector<Arc> arcs;  // ascending arc id
  Vertex source = -1;
  Vertex target = -1;

  std::size_t size() const noexcept { return arcs.size(); }
};

namespace detail {

/// Unit-capacity max-flow; returns the flow value and the arcs leaving the
/// set of vertices reachable from `s` in the final residual graph.
inline std::pair<int, std::vector<int>> unit_min_cut(const Digraph& d, Vertex s, Vertex t) {
  std::vector<char> flow(d.size(), 0);
  const int n = d.order();
  int value = 0;
  std::vector<int> via(n);  // arc id used to reach v; encoded as id+1 (forward) or -(id+1) (backward)
  std::vector<char> seen(n);
  auto bfs = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<Vertex> queue{s};
    seen[s] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex v = queue[qi];
      for (Vertex w : d.out_neighbors(v)) {
        const int id = d.arc_id(v, w);
        if (!seen[w] && !flow[id]) {
          seen[w] = 1;
          via[w] = id + 1;
          queue.push_back(w);
        }
      }
      for (Vertex w : d.in_neighbors(v)) {
        const int id = d.arc_id(w, v);
        if (!seen[w] && flow[id]) {
          seen[w] = 1;
          via[w] = -(id + 1);
          queue.push_back(w);
        }
      }
    }
    return seen[t] != 0;
  };
  while (bfs()) {
    for (Vertex v = t; v != s;) {
      if (via[v] > 0) {
        const int id = via[v] - 1;
        flow[id] = 1;
        v = d.arc(id).from;
      } else {
        const int id = -via[v] - 1;
        flow[id] = 0;
        v = d.arc(id).to;
      }
    }
    ++value;
  }
  std::vector<int> cut;
  for (int id = 0; id < d.size(); ++id)
    if (seen[d.arc(id).from] && !seen[d.arc(id).to]) cut.push_back(id);
  return {value, cut};
}

}  // namespace detail

/// Maximum number of arc-disjoint u->v paths.
inline int arc_connectivity(const Digraph& d, Vertex u, Vertex v) { return detail::unit_min_cut(d, u, v).first; }

/// Minimum S-strong-subgraph-cut: an arc set C is such a cut iff some
/// ordered terminal pair (u, v) has no u->v path in d - C, so the minimum
/// is the smallest one-directional u->v arc cut. Ties go to the smaller
/// size, then the lexicographically smaller arc-id list.
inline CutCertificate min_strong_cut(const Digraph& d, const TerminalSet& s) {
  if (!is_strong(d)) throw PreconditionError("min_strong_cut: digraph is not strong");
  std::optional<std::vector<int>> best;
  CutCertificate out;
  for (Vertex u : s)
    for (Vertex v : s) {
      if (u == v) continue;
      auto [value, cut] = detail::unit_min_cut(d, u, v);
      if (!best || cut.size() < best->size() || (cut.size() == best->size() && cut < *best)) {
        best = cut;
        out.source = u;
        out.target = v;
      }
    }
  for (int id : *best) out.arcs.push_back(d.arc(id));
  return out;
}

/// True iff removing the certificate's arcs leaves source unable to reach
/// target.
inline bool separates(const Digraph& d, const CutCertificate& c) {
  std::vector<char> usable(d.size(), 1);
  for (const Arc& a : c.arcs) {
    const int id = d.arc_id(a.from, a.to);
    if (id < 0) return false;
    usable[id] = 0;
  }
  std::vector<char> seen(d.order(), 0);
  std::vector<Vertex> todo{c.source};
  seen[c.source] = 1;
  while (!todo.empty()) {
    const Vertex v = todo.back();
    todo.pop_back();
    for (Vertex w : d.out_neighbors(v))
      if (!seen[w] && usable[d.arc_id(v, w)]) {
        seen[w] = 1;
        todo.push_back(w);
      }
  }
  return !seen[c.target];
}

/// Minimum S-Steiner-cut of the underlying undirected graph of a symmetric
/// digraph: the smallest edge cut separating some terminal pair. Each edge
/// is the pair of opposite unit arcs, so the u-v edge connectivity is the
/// u->v flow value.
inline int steiner_cut_undirected(const Digraph& g, const TerminalSet& s) {
  if (!is_symmetric(g)) throw PreconditionError("steiner_cut_undirected: digraph is not symmetric");
  if (!underlying_connected(g)) throw PreconditionError("steiner_cut_undirected: graph is not connected");
  int best = std::numeric_limits<int>::max();
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) best = std::min(best, arc_connectivity(g, m[i], m[j]));
  return best;
}

struct CutReport {
  int c1 = 0;
  int c2 = 0;
  bool holds = false;  // c2 <= 2 * c1
};

inline CutReport check_cut_relation(const Digraph& g, const TerminalSet& s) {
  CutReport r;
  r.c1 = steiner_cut_undirected(g, s);
  r.c2 = static_cast<int>(min_strong_cut(g, s).size());
  r.holds = r.c2 <= 2 * r.c1;
  return r;
}

}  // namespace strongpack
