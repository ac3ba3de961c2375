#include <gtest/gtest.h>

#include "strongpack/composition.hpp"
#include "strongpack/generators.hpp"
#include "strongpack/hamilton.hpp"

using namespace strongpack;

TEST(CompositionSpec, Invariants) {
  EXPECT_THROW(CompositionSpec(Digraph(1), {Digraph(1)}), PreconditionError);
  EXPECT_THROW(CompositionSpec(directed_cycle(3), {Digraph(1), Digraph(1)}), PreconditionError);
  EXPECT_THROW(CompositionSpec(directed_cycle(2), {Digraph(1), Digraph(0)}), PreconditionError);

  const CompositionSpec spec(directed_cycle(3), {empty_digraph(2), empty_digraph(4), empty_digraph(3)});
  EXPECT_EQ(spec.n0(), 2);
  EXPECT_EQ(spec.order(), 9);
  EXPECT_EQ(spec.flat(1, 0), 2);
  EXPECT_EQ(spec.flat(2, 2), 8);
  EXPECT_EQ(spec.layer_of(5), 1);
  EXPECT_EQ(spec.layer_of(6), 2);
  EXPECT_EQ(spec.layer(2), (std::vector<Vertex>{6, 7, 8}));
}

TEST(Compose, TwoCycleOfIndependentSets) {
  const Digraph q = compose(CompositionSpec(directed_cycle(2), {empty_digraph(2), empty_digraph(2)}));
  EXPECT_TRUE(same_arc_set(q, complete_bipartite(2, 2)));
  EXPECT_EQ(q.size(), 8);
}

TEST(Compose, ThreeCycleOfPairs) {
  const Digraph q = compose(uniform_composition(directed_cycle(3), empty_digraph(2)));
  EXPECT_EQ(q.order(), 6);
  EXPECT_EQ(q.size(), 12);
}

TEST(Compose, PathInsideTwoCycle) {
  const Digraph q = compose(CompositionSpec(directed_cycle(2), {directed_path(2), Digraph(1)}));
  EXPECT_EQ(q.order(), 3);
  const Digraph expected(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}, {2, 1}});
  EXPECT_TRUE(same_arc_set(q, expected));
}

TEST(Compose, DegreeArithmetic) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const CompositionSpec spec = random_semicomplete_composition(rng, rng.uniform(2, 4), {1, 3, 40});
    const Digraph q = compose(spec);
    for (int i = 0; i < spec.t(); ++i)
      for (int j = 0; j < spec.inner_order(i); ++j) {
        int expect_out = spec.inner(i).out_degree(j);
        int expect_in = spec.inner(i).in_degree(j);
        for (Vertex p : spec.outer().out_neighbors(i)) expect_out += spec.inner_order(p);
        for (Vertex p : spec.outer().in_neighbors(i)) expect_in += spec.inner_order(p);
        ASSERT_EQ(q.out_degree(spec.flat(i, j)), expect_out);
        ASSERT_EQ(q.in_degree(spec.flat(i, j)), expect_in);
      }
  }
}

TEST(LexicographicProduct, Examples) {
  for (int t = 2; t <= 4; ++t)
    for (int r = 1; r <= 3; ++r)
      EXPECT_TRUE(same_arc_set(lexicographic_product(directed_cycle(t), empty_digraph(r)), cycle_blowup(t, r)));
  const Digraph two_cycle(2, {{0, 1}, {1, 0}});
  EXPECT_TRUE(same_arc_set(lexicographic_product(two_cycle, empty_digraph(2)), complete_bipartite(2, 2)));
  const Digraph c33 = lexicographic_product(directed_cycle(3), empty_digraph(3));
  EXPECT_EQ(c33.order(), 9);
  EXPECT_EQ(c33.size(), 27);
  EXPECT_THROW(lexicographic_product(Digraph(1), empty_digraph(2)), PreconditionError);
}

TEST(LexicographicProduct, DisplayedDefinition) {
  const Digraph g(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  const Digraph h = directed_path(2);
  const Digraph p = lexicographic_product(g, h);
  for (int u = 0; u < 3; ++u)
    for (int a = 0; a < 2; ++a)
      for (int v = 0; v < 3; ++v)
        for (int b = 0; b < 2; ++b) {
          if (u == v && a == b) continue;
          const bool expected = g.has_arc(u, v) || (u == v && h.has_arc(a, b));
          EXPECT_EQ(p.has_arc(u * 2 + a, v * 2 + b), expected);
        }
}

namespace {

Digraph recompose(const CanonicalDecomposition& dec, int n) {
  const Digraph q = compose(dec.spec);
  Digraph back(n);
  for (const Arc& a : q.arcs()) back.add_arc(dec.original[a.from], dec.original[a.to]);
  return back;
}

}  // namespace

TEST(CanonicalDecomposition, StrongTournament) {
  const Digraph d(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 1}});
  const auto dec = canonical_decomposition_strong_qt(d);
  EXPECT_EQ(dec.spec.t(), 4);
  EXPECT_EQ(dec.spec.n0(), 1);
  EXPECT_TRUE(same_arc_set(recompose(dec, 4), d));
}

TEST(CanonicalDecomposition, CycleOfIndependentSets) {
  const auto dec = canonical_decomposition_strong_qt(lexicographic_product(directed_cycle(3), empty_digraph(2)));
  EXPECT_EQ(dec.spec.t(), 3);
  EXPECT_TRUE(is_semicomplete(dec.spec.outer()) && is_strong(dec.spec.outer()));
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(dec.spec.inner(i).order(), 2);
    EXPECT_EQ(dec.spec.inner(i).size(), 0);
  }
}

TEST(CanonicalDecomposition, CompleteBipartiteIsNotQuasiTransitive) {
  EXPECT_FALSE(is_quasi_transitive(complete_bipartite(2, 2)));
  EXPECT_THROW(canonical_decomposition_strong_qt(complete_bipartite(2, 2)), PreconditionError);
}

TEST(CanonicalDecomposition, ThreeCycle) {
  const auto dec = canonical_decomposition_strong_qt(directed_cycle(3));
  EXPECT_EQ(dec.spec.t(), 3);
  EXPECT_TRUE(same_arc_set(dec.spec.outer(), directed_cycle(3)));
}

TEST(CanonicalDecomposition, Rejections) {
  EXPECT_THROW(canonical_decomposition_strong_qt(directed_path(3)), PreconditionError);
  EXPECT_THROW(canonical_decomposition_strong_qt(directed_cycle(4)), PreconditionError);
  EXPECT_THROW(canonical_decomposition_strong_qt(Digraph(1)), PreconditionError);
}

TEST(CanonicalDecomposition, RandomCompositionsRecompose) {
  Rng rng(32);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const CompositionSpec spec = random_semicomplete_composition(rng, rng.uniform(2, 4), {1, 3, 30});
    Digraph q = compose(spec);
    std::vector<Vertex> perm(q.order());
    for (int i = 0; i < q.order(); ++i) perm[i] = i;
    rng.shuffle(perm);
    Digraph shuffled(q.order());
    for (const Arc& a : q.arcs()) shuffled.add_arc(perm[a.from], perm[a.to]);
    if (!is_quasi_transitive(shuffled)) continue;  // non-transitive inner parts can break quasi-transitivity
    const auto dec = canonical_decomposition_strong_qt(shuffled);
    ASSERT_TRUE(same_arc_set(recompose(dec, shuffled.order()), shuffled));
    ASSERT_TRUE(is_semicomplete(dec.spec.outer()));
    ASSERT_TRUE(is_strong(dec.spec.outer()));
    for (const auto& h : dec.spec.inners()) ASSERT_TRUE(h.order() == 1 || !is_strong(h));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}
