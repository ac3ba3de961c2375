#pragma once

// Compositions Q = D[H_1, ..., H_t], lexicographic products, and the
// canonical decomposition of strong quasi-transitive digraphs.

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "strongpack/digraph.hpp"

namespace strongpack {

/// Outer digraph on t vertices and one inner digraph per outer vertex.
/// Flattened ids are layer-major: (i, j) -> offset(i) + j.
class CompositionSpec {
 public:
  CompositionSpec() = default;

  CompositionSpec(Digraph outer, std::vector<Digraph> inners) : outer_(std::move(outer)), inners_(std::move(inners)) {
    if (outer_.order() < 2) throw PreconditionError("composition: outer digraph needs t >= 2 vertices");
    if (static_cast<int>(inners_.size()) != outer_.order())
      throw PreconditionError("composition: expected " + std::to_string(outer_.order()) + " inner digraphs, got " +
                              std::to_string(inners_.size()));
    offsets_.assign(inners_.size() + 1, 0);
    for (std::size_t i = 0; i < inners_.size(); ++i) {
      if (inners_[i].order() < 1) throw PreconditionError("composition: inner digraph " + std::to_string(i) + " is empty");
      offsets_[i + 1] = offsets_[i] + inners_[i].order();
    }
    n0_ = inners_.front().order();
    for (const auto& h : inners_) n0_ = std::min(n0_, h.order());
  }

  const Digraph& outer() const noexcept { return outer_; }
  const std::vector<Digraph>& inners() const noexcept { return inners_; }
  const Digraph& inner(int i) const { return inners_.at(i); }
  int t() const noexcept { return outer_.order(); }
  int inner_order(int i) const { return inners_.at(i).order(); }
  /// Minimum inner order.
  int n0() const noexcept { return n0_; }
  int order() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }

  Vertex flat(int layer, int j) const { return offsets_.at(layer) + j; }
  int offset(int layer) const { return offsets_.at(layer); }
  int layer_of(Vertex v) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), v);
    return static_cast<int>(it - offsets_.begin()) - 1;
  }
  std::vector<Vertex> layer(int i) const {
    std::vector<Vertex> out(static_cast<std::size_t>(inner_order(i)));
    std::iota(out.begin(), out.end(), offset(i));
    return out;
  }

 private:
  Digraph outer_;
  std::vector<Digraph> inners_;
  std::vector<int> offsets_;
  int n0_ = 0;
};

/// Inner arcs first (layer order), then for each outer arc u_i u_p all
/// arcs from layer i to layer p.
inline Digraph compose(const CompositionSpec& spec) {
  Digraph q(spec.order());
  for (int i = 0; i < spec.t(); ++i)
    for (const Arc& a : spec.inner(i).arcs()) q.add_arc(spec.flat(i, a.from), spec.flat(i, a.to));
  for (const Arc& a : spec.outer().arcs())
    for (int j = 0; j < spec.inner_order(a.from); ++j)
      for (int k = 0; k < spec.inner_order(a.to); ++k) q.add_arc(spec.flat(a.from, j), spec.flat(a.to, k));
  return q;
}

inline CompositionSpec uniform_composition(const Digraph& g, const Digraph& h) {
  return CompositionSpec(g, std::vector<Digraph>(static_cast<std::size_t>(g.order()), h));
}

/// G o H; vertex (u, u') has id u * |V(H)| + u'.
inline Digraph lexicographic_product(const Digraph& g, const Digraph& h) {
  if (g.order() < 2) throw PreconditionError("lexicographic_product: |V(G)| must be at least 2");
  return compose(uniform_composition(g, h));
}

/// Decomposition of a digraph together with the relabelling from flattened
/// ids back to the original vertex ids.
struct CanonicalDecomposition {
  CompositionSpec spec;
  std::vector<Vertex> original;  // flattened id -> original id
};

/// Strong quasi-transitive d = S[Q_1, ..., Q_s]: the Q_j are the connected
/// components of the complement of the underlying graph, ordered by smallest
/// member; the outer digraph is the quotient. The result is checked against
/// d and against the semicomplete/strong/non-strong-part requirements.
inline CanonicalDecomposition canonical_decomposition_strong_qt(const Digraph& d) {
  const int n = d.order();
  if (n < 2) throw PreconditionError("canonical decomposition: need at least two vertices");
  if (!is_strong(d)) throw PreconditionError("canonical decomposition: digraph is not strong");
  if (!is_quasi_transitive(d)) throw PreconditionError("canonical decomposition: digraph is not quasi-transitive");

  std::vector<int> part(n, -1);
  int parts = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (part[s] >= 0) continue;
    part[s] = parts;
    std::vector<Vertex> todo{s};
    while (!todo.empty()) {
      const Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w = 0; w < n; ++w)
        if (w != v && part[w] < 0 && !d.has_arc(v, w) && !d.has_arc(w, v)) {
          part[w] = parts;
          todo.push_back(w);
        }
    }
    ++parts;
  }

  std::vector<std::vector<Vertex>> members(parts);
  for (Vertex v = 0; v < n; ++v) members[part[v]].push_back(v);

  Digraph outer(parts);
  for (int i = 0; i < parts; ++i)
    for (int p = 0; p < parts; ++p)
      if (i != p && d.has_arc(members[i].front(), members[p].front())) outer.add_arc(i, p);

  std::vector<Digraph> inners;
  for (const auto& m : members) inners.push_back(induced_subgraph(d, m));

  CanonicalDecomposition out{CompositionSpec(std::move(outer), std::move(inners)), {}};
  for (const auto& m : members) out.original.insert(out.original.end(), m.begin(), m.end());

  // Postconditions.
  const Digraph q = compose(out.spec);
  bool same = q.size() == d.size();
  for (const Arc& a : q.arcs()) same = same && d.has_arc(out.original[a.from], out.original[a.to]);
  if (!same) throw PreconditionError("canonical decomposition: recomposition does not reproduce the input");
  if (!is_semicomplete(out.spec.outer()) || !is_strong(out.spec.outer()))
    throw PreconditionError("canonical decomposition: quotient is not strong semicomplete");
  for (const auto& h : out.spec.inners())
    if (h.order() > 1 && is_strong(h)) throw PreconditionError("canonical decomposition: strong inner part");
  return out;
}

}  // namespace strongpack
