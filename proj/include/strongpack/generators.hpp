#pragma once

// Seeded random instance families. Draws go through mt19937_64 and a
// rejection-sampled range reduction, so output depends only on the seed.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strongpack/composition.hpp"
#include "strongpack/digraph.hpp"
#include "strongpack/reductions.hpp"

namespace strongpack {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  bool coin(int percent) { return uniform(0, 99) < percent; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
  }

  /// `k` distinct values from 0..n-1, sorted.
  std::vector<int> sample(int n, int k) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[i] = i;
    shuffle(all);
    all.resize(static_cast<std::size_t>(k));
    std::sort(all.begin(), all.end());
    return all;
  }

 private:
  std::mt19937_64 engine_;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Each ordered pair becomes an arc with probability `percent`.
inline Digraph random_digraph(Rng& rng, int n, int percent) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.coin(percent)) d.add_arc(u, v);
  return d;
}

/// Random digraph conditioned on being strong.
inline Digraph random_strong_digraph(Rng& rng, int n, int percent, int retries = 1000) {
  for (int attempt = 0; attempt < retries; ++attempt) {
    Digraph d = random_digraph(rng, n, percent);
    if (is_strong(d)) return d;
  }
  throw GenerationError("no strong digraph after " + std::to_string(retries) + " attempts");
}

/// Biorientation of a random connected graph: a random spanning tree plus
/// each remaining edge with probability `percent`.
inline Digraph random_connected_symmetric(Rng& rng, int n, int percent) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  for (int i = 1; i < n; ++i) edges.emplace_back(order[rng.uniform(0, i - 1)], order[i]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin(percent)) edges.emplace_back(u, v);
  return symmetric_from_edges(n, edges);
}

/// Strong semicomplete digraph: each pair gets one random direction, and
/// the opposite arc as well with probability `percent`.
inline Digraph random_strong_semicomplete(Rng& rng, int n, int percent, int retries = 1000) {
  for (int attempt = 0; attempt < retries; ++attempt) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const bool forward = rng.coin(50);
        const bool both = rng.coin(percent);
        if (forward || both) d.add_arc(u, v);
        if (!forward || both) d.add_arc(v, u);
      }
    if (is_strong(d)) return d;
  }
  throw GenerationError("no strong semicomplete digraph after " + std::to_string(retries) + " attempts");
}

struct InnerRange {
  int min_order = 1;
  int max_order = 3;
  int arc_percent = 20;
};

inline std::vector<Digraph> random_inners(Rng& rng, int t, const InnerRange& range) {
  std::vector<Digraph> inners;
  for (int i = 0; i < t; ++i) inners.push_back(random_digraph(rng, rng.uniform(range.min_order, range.max_order), range.arc_percent));
  return inners;
}

inline CompositionSpec random_symmetric_composition(Rng& rng, int t, const InnerRange& range, int outer_percent = 40) {
  Digraph outer = random_connected_symmetric(rng, t, outer_percent);
  return CompositionSpec(std::move(outer), random_inners(rng, t, range));
}

inline CompositionSpec random_semicomplete_composition(Rng& rng, int t, const InnerRange& range,
                                                       int two_cycle_percent = 30) {
  Digraph outer = random_strong_semicomplete(rng, t, two_cycle_percent);
  return CompositionSpec(std::move(outer), random_inners(rng, t, range));
}

/// Random hypergraph with `e` edges of size 1..max_edge.
inline Hypergraph random_hypergraph(Rng& rng, int n, int e, int max_edge) {
  Hypergraph h{n, {}};
  for (int i = 0; i < e; ++i) h.edges.push_back(rng.sample(n, rng.uniform(1, std::min(n, max_edge))));
  return h;
}

struct LinkageInstance {
  Digraph digraph;
  Vertex s1 = 0, t1 = 0, s2 = 0, t2 = 0;
};

/// Union of `cycles` random arc-disjoint directed cycles on n >= 4 vertices,
/// conditioned on a connected underlying graph; random distinct terminals.
inline LinkageInstance random_eulerian_linkage(Rng& rng, int n, int cycles, int retries = 1000) {
  if (n < 4) throw GenerationError("eulerian-linkage needs n >= 4");
  for (int attempt = 0; attempt < retries; ++attempt) {
    Digraph d(n);
    for (int c = 0; c < cycles; ++c) {
      const int len = rng.uniform(2, n);
      auto vs = rng.sample(n, len);
      rng.shuffle(vs);
      bool fresh = true;
      for (int i = 0; i < len && fresh; ++i) fresh = !d.has_arc(vs[i], vs[(i + 1) % len]);
      if (!fresh) continue;
      for (int i = 0; i < len; ++i) d.add_arc(vs[i], vs[(i + 1) % len]);
    }
    if (!is_eulerian(d)) continue;
    auto t = rng.sample(n, 4);
    rng.shuffle(t);
    return {std::move(d), t[0], t[1], t[2], t[3]};
  }
  throw GenerationError("no connected Eulerian digraph after " + std::to_string(retries) + " attempts");
}

}  // namespace strongpack
