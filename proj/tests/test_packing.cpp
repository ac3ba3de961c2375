#include <gtest/gtest.h>

#include "strongpack/exact.hpp"
#include "strongpack/generators.hpp"
#include "strongpack/packing.hpp"

using namespace strongpack;

namespace {

bool parts_are_strong_spanning(const Packing& p) {
  for (const auto& part : p.parts) {
    if (static_cast<int>(part_vertices(part).size()) != p.host.order()) return false;
    if (!part_is_strong(p.host, part)) return false;
  }
  return true;
}

}  // namespace

TEST(VerifyPacking, Examples) {
  const Digraph c3 = directed_cycle(3);
  EXPECT_TRUE(verify_packing(Packing{c3, TerminalSet::all(c3), PackingMode::arc_disjoint, {c3.arcs()}}));

  const Digraph k = complete_digraph(3);
  const TerminalSet s({0, 1}, k);
  const PackingVerdict shared =
      verify_packing(Packing{k, s, PackingMode::arc_disjoint, {{{0, 1}, {1, 0}}, {{0, 1}, {1, 2}, {2, 0}}}});
  EXPECT_FALSE(shared.ok);
  EXPECT_EQ(shared.clause, "arc-disjoint");
  EXPECT_EQ(shared.part, 0);
  EXPECT_EQ(shared.other, 1);
  ASSERT_TRUE(shared.arc.has_value());
  EXPECT_EQ(*shared.arc, (Arc{0, 1}));

  // 0 and 1 are terminals; both parts route through vertex 5.
  Digraph h(6);
  for (Vertex v : {2, 3, 5}) {
    h.add_arc(0, v);
    h.add_arc(v, 1);
  }
  h.add_arc(1, 5);
  h.add_arc(5, 0);
  h.add_arc(1, 0);
  const TerminalSet t({0, 1}, h);
  const PackingVerdict internal = verify_packing(
      Packing{h, t, PackingMode::internally_disjoint, {{{0, 5}, {5, 1}, {1, 0}}, {{0, 2}, {2, 1}, {1, 5}, {5, 0}}}});
  EXPECT_FALSE(internal.ok);
  EXPECT_EQ(internal.clause, "internal disjointness");
  ASSERT_TRUE(internal.vertex.has_value());
  EXPECT_EQ(*internal.vertex, 5);
}

TEST(VerifyPacking, OtherClauses) {
  const Digraph c3 = directed_cycle(3);
  const TerminalSet all = TerminalSet::all(c3);
  EXPECT_EQ(verify_packing(Packing{c3, all, PackingMode::arc_disjoint, {{{0, 2}}}}).clause, "arc not in host");
  EXPECT_EQ(verify_packing(Packing{c3, all, PackingMode::arc_disjoint, {{{0, 1}, {0, 1}}}}).clause, "repeated arc");
  const Digraph k = complete_digraph(3);
  EXPECT_EQ(verify_packing(Packing{k, TerminalSet::all(k), PackingMode::arc_disjoint, {{{0, 1}, {1, 0}}}}).clause,
            "missing terminal");
  EXPECT_EQ(verify_packing(Packing{k, TerminalSet({0, 1}, k), PackingMode::arc_disjoint, {{{0, 1}, {1, 2}}}}).clause,
            "not strong");
  EXPECT_TRUE(verify_packing(Packing{k, TerminalSet({0, 1}, k), PackingMode::arc_disjoint, {}}));
  EXPECT_NE(verify_packing(Packing{k, TerminalSet({0, 1}, k), PackingMode::arc_disjoint, {{{0, 1}, {1, 2}}}})
                .describe()
                .find("part 0"),
            std::string::npos);
}

TEST(PackBipartite, Examples) {
  const Packing one = pack_bipartite(1, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.parts[0].size(), 2u);

  const Packing two = pack_bipartite(2, 3);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_TRUE(verify_packing(two));
  EXPECT_TRUE(parts_are_strong_spanning(two));
  EXPECT_EQ(exact_lambda_k(complete_bipartite(2, 3), 2), 2);

  const Packing three = pack_bipartite(3, 3);
  EXPECT_EQ(three.size(), 3u);
  for (const auto& part : three.parts) EXPECT_EQ(part.size(), 6u);
  EXPECT_TRUE(parts_are_strong_spanning(three));

  EXPECT_THROW(pack_bipartite(3, 2), PreconditionError);
  EXPECT_THROW(pack_bipartite(0, 2), PreconditionError);
}

TEST(PackBipartite, GridMatchesDegreeBound) {
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 6; ++b) {
      const Packing p = pack_bipartite(a, b);
      ASSERT_EQ(static_cast<int>(p.size()), a);
      ASSERT_EQ(min_semi_degree(p.host), a);
      ASSERT_TRUE(verify_packing(p));
      ASSERT_TRUE(parts_are_strong_spanning(p));
      int used = 0;
      for (const auto& part : p.parts) used += static_cast<int>(part.size());
      ASSERT_EQ(used, 2 * a * b);
    }
}

TEST(PackBipartite, CustomTerminals) {
  const Digraph host = complete_bipartite(2, 4);
  const Packing p = pack_bipartite(2, 4, TerminalSet({0, 5}, host));
  EXPECT_EQ(p.terminals.members(), (std::vector<Vertex>{0, 5}));
  EXPECT_TRUE(verify_packing(p));
}

TEST(CompleteBipartiteSides, Recognition) {
  const auto sides = complete_bipartite_sides(complete_bipartite(3, 2));
  ASSERT_TRUE(sides.has_value());
  EXPECT_EQ(sides->first, (std::vector<Vertex>{3, 4}));
  EXPECT_EQ(sides->second, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(complete_bipartite_sides(complete_digraph(3)).has_value());
  EXPECT_FALSE(complete_bipartite_sides(symmetric_from_edges(4, {{0, 1}, {1, 2}, {2, 3}})).has_value());
  EXPECT_TRUE(complete_bipartite_sides(directed_cycle(2)).has_value());
}

TEST(Q0, Membership) {
  const Digraph c3 = directed_cycle(3);
  EXPECT_TRUE(is_in_Q0(compose(uniform_composition(c3, empty_digraph(2)))).member);
  EXPECT_FALSE(is_in_Q0(complete_bipartite(2, 2)).member);
  const Q0Verdict v = is_in_Q0(compose(CompositionSpec(c3, {empty_digraph(2), empty_digraph(2), empty_digraph(3)})));
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.which, 2);
  EXPECT_TRUE(is_in_Q0(compose(CompositionSpec(c3, {empty_digraph(2), directed_path(2), empty_digraph(2)}))).member);
  EXPECT_FALSE(is_in_Q0(compose(CompositionSpec(c3, {empty_digraph(2), empty_digraph(2), empty_digraph(4)}))).member);
  EXPECT_EQ(q0_members()[0].size(), 12);
  EXPECT_EQ(q0_members()[1].size(), 13);
  EXPECT_EQ(q0_members()[2].size(), 16);
}

TEST(Q0, WitnessIsAnIsomorphism) {
  Rng rng(41);
  for (int i = 0; i < 3; ++i) {
    const Digraph& m = q0_members()[i];
    std::vector<Vertex> perm(m.order());
    for (int v = 0; v < m.order(); ++v) perm[v] = v;
    rng.shuffle(perm);
    Digraph relabelled(m.order());
    for (const Arc& a : m.arcs()) relabelled.add_arc(perm[a.from], perm[a.to]);
    const Q0Verdict v = is_in_Q0(relabelled);
    ASSERT_TRUE(v.member);
    ASSERT_EQ(v.which, i);
    for (const Arc& a : relabelled.arcs()) ASSERT_TRUE(m.has_arc(v.isomorphism[a.from], v.isomorphism[a.to]));
  }
}

TEST(PackSymmetric, Examples) {
  const Digraph two(2, {{0, 1}, {1, 0}});
  const CompositionSpec a(two, {empty_digraph(2), empty_digraph(3)});
  const Packing pa = pack_symmetric_composition(a, TerminalSet::all(compose(a)));
  EXPECT_EQ(pa.size(), 2u);
  EXPECT_TRUE(verify_packing(pa));
  EXPECT_GE(exact_lambda_S(pa.host, pa.terminals).value, 2);

  const CompositionSpec b(symmetric_from_edges(3, {{0, 1}, {1, 2}}), std::vector<Digraph>(3, empty_digraph(2)));
  const Packing pb = pack_symmetric_composition(b, TerminalSet::all(compose(b)));
  EXPECT_EQ(pb.size(), 2u);
  EXPECT_TRUE(verify_packing(pb));
  EXPECT_TRUE(parts_are_strong_spanning(pb));

  const CompositionSpec c(two, {Digraph(1), Digraph(1)});
  const Packing pc = pack_symmetric_composition(c, TerminalSet::all(compose(c)));
  ASSERT_EQ(pc.size(), 1u);
  EXPECT_EQ(pc.parts[0].size(), 2u);
}

TEST(PackSymmetric, Rejections) {
  const CompositionSpec not_sym(directed_cycle(3), std::vector<Digraph>(3, empty_digraph(2)));
  EXPECT_THROW(pack_symmetric_composition(not_sym, TerminalSet::all(compose(not_sym))), PreconditionError);
  const CompositionSpec not_strong(Digraph(2), {empty_digraph(1), empty_digraph(1)});
  const Digraph q = compose(not_strong);
  EXPECT_THROW(pack_symmetric_composition(not_strong, TerminalSet::all(q)), PreconditionError);
}

TEST(PackSymmetric, InnerArcsAreDropped) {
  const CompositionSpec spec(symmetric_from_edges(3, {{0, 1}, {0, 2}}), {complete_digraph(3), directed_path(2), Digraph(1)});
  const Packing p = pack_symmetric_composition(spec, TerminalSet::all(compose(spec)));
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(verify_packing(p));
  for (const auto& part : p.parts)
    for (const Arc& a : part) EXPECT_NE(spec.layer_of(a.from), spec.layer_of(a.to));
}

TEST(PackSemicomplete, Examples) {
  const Digraph c3 = directed_cycle(3);
  const CompositionSpec three = uniform_composition(c3, empty_digraph(3));
  const Packing p3 = pack_semicomplete_composition(three, TerminalSet::all(compose(three)));
  EXPECT_EQ(p3.size(), 3u);
  EXPECT_TRUE(verify_packing(p3));
  EXPECT_EQ(min_semi_degree(p3.host), 3);

  const CompositionSpec q0 = uniform_composition(c3, empty_digraph(2));
  try {
    pack_semicomplete_composition(q0, TerminalSet::all(compose(q0)));
    FAIL() << "expected Q0Error";
  } catch (const Q0Error& e) {
    EXPECT_TRUE(e.verdict().member);
    EXPECT_NE(std::string(e.what()).find("Q0"), std::string::npos);
  }

  const Digraph tournament(3, {{0, 1}, {1, 2}, {2, 0}});
  const CompositionSpec fallback(tournament, {empty_digraph(2), empty_digraph(2), empty_digraph(4)});
  const Packing pf = pack_semicomplete_composition(fallback, TerminalSet::all(compose(fallback)));
  EXPECT_EQ(pf.size(), 2u);
  EXPECT_TRUE(verify_packing(pf));
  EXPECT_TRUE(parts_are_strong_spanning(pf));
}

TEST(PackSemicomplete, SingleVertexLayerGivesWholeDigraph) {
  const Digraph t4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 1}});
  const CompositionSpec spec(t4, {empty_digraph(3), Digraph(1), empty_digraph(2), empty_digraph(5)});
  const Packing p = pack_semicomplete_composition(spec, TerminalSet::all(compose(spec)));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(static_cast<int>(p.parts[0].size()), p.host.size());
}

TEST(PackSemicomplete, Rejections) {
  const CompositionSpec not_semi(directed_cycle(4), std::vector<Digraph>(4, empty_digraph(3)));
  EXPECT_THROW(pack_semicomplete_composition(not_semi, TerminalSet::all(compose(not_semi))), PreconditionError);
  const CompositionSpec not_strong(Digraph(3, {{0, 1}, {1, 2}, {0, 2}}), std::vector<Digraph>(3, empty_digraph(3)));
  EXPECT_THROW(pack_semicomplete_composition(not_strong, TerminalSet::all(compose(not_strong))), PreconditionError);
}

TEST(PackSemicomplete, LargeInnerLayersUseBlowup) {
  const Digraph t4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 1}, {1, 3}});
  const CompositionSpec spec(t4, {empty_digraph(3), complete_digraph(4), directed_cycle(3), empty_digraph(5)});
  const Packing p = pack_semicomplete_composition(spec, TerminalSet::all(compose(spec)));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(verify_packing(p));
  EXPECT_TRUE(parts_are_strong_spanning(p));
}

TEST(PackQuasiTransitive, Examples) {
  const Digraph c3k3 = lexicographic_product(directed_cycle(3), empty_digraph(3));
  const Packing a = pack_quasi_transitive(c3k3, TerminalSet::all(c3k3));
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(verify_packing(a));

  const Digraph t4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 1}});
  EXPECT_EQ(pack_quasi_transitive(t4, TerminalSet::all(t4)).size(), 1u);

  const Digraph mixed = compose(CompositionSpec(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}),
                                                {empty_digraph(3), Digraph(3, {{0, 1}}), empty_digraph(4)}));
  ASSERT_TRUE(is_quasi_transitive(mixed));
  const Packing c = pack_quasi_transitive(mixed, TerminalSet({0, 4}, mixed));
  EXPECT_EQ(c.size(), 3u);
  EXPECT_TRUE(verify_packing(c));
  EXPECT_TRUE(same_arc_set(c.host, mixed));
}

TEST(PackQuasiTransitive, RejectionsAndRelabelling) {
  EXPECT_THROW(pack_quasi_transitive(directed_cycle(4), TerminalSet::all(directed_cycle(4))), PreconditionError);
  const Digraph& m = q0_members()[1];
  EXPECT_THROW(pack_quasi_transitive(m, TerminalSet::all(m)), Q0Error);

  // Shuffled ids still come back in the caller's numbering.
  const Digraph q = compose(uniform_composition(directed_cycle(3), empty_digraph(3)));
  Rng rng(42);
  std::vector<Vertex> perm(q.order());
  for (int v = 0; v < q.order(); ++v) perm[v] = v;
  rng.shuffle(perm);
  Digraph d(q.order());
  for (const Arc& a : q.arcs()) d.add_arc(perm[a.from], perm[a.to]);
  const Packing p = pack_quasi_transitive(d, TerminalSet({perm[0], perm[4]}, d));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_TRUE(verify_packing(p));
}

TEST(PackingProperties, SymmetricCompositionsGiveN0SpanningParts) {
  Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const CompositionSpec spec = random_symmetric_composition(rng, rng.uniform(2, 5), {1, 4, 30});
    const Digraph q = compose(spec);
    const TerminalSet s(rng.sample(q.order(), rng.uniform(2, q.order())), q);
    const Packing p = pack_symmetric_composition(spec, s);
    ASSERT_EQ(static_cast<int>(p.size()), spec.n0());
    ASSERT_TRUE(verify_packing(p));
    ASSERT_TRUE(parts_are_strong_spanning(p));
  }
}

TEST(PackingProperties, SemicompleteCompositionsGiveN0SpanningParts) {
  Rng rng(44);
  int done = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const CompositionSpec spec = random_semicomplete_composition(rng, rng.uniform(2, 5), {1, 4, 30});
    const Digraph q = compose(spec);
    if (is_in_Q0(q).member || q.order() > 14) continue;
    const TerminalSet s(rng.sample(q.order(), rng.uniform(2, q.order())), q);
    const Packing p = pack_semicomplete_composition(spec, s);
    ASSERT_EQ(static_cast<int>(p.size()), spec.n0());
    ASSERT_TRUE(verify_packing(p));
    ASSERT_TRUE(parts_are_strong_spanning(p));
    ++done;
  }
  EXPECT_GT(done, 100);
}

TEST(PackingProperties, ConstructionNeverBeatsExact) {
  Rng rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const bool sym = rng.coin(50);
    const CompositionSpec spec = sym ? random_symmetric_composition(rng, rng.uniform(2, 3), {1, 3, 30})
                                     : random_semicomplete_composition(rng, rng.uniform(2, 3), {1, 3, 30});
    const Digraph q = compose(spec);
    if (q.order() > 9 || is_in_Q0(q).member) continue;
    const TerminalSet s(rng.sample(q.order(), rng.uniform(2, q.order())), q);
    const Packing p = sym ? pack_symmetric_composition(spec, s) : pack_semicomplete_composition(spec, s);
    ASSERT_LE(static_cast<int>(p.size()), exact_lambda_S(q, s, ExactLimits{9, 64}).value);
  }
}
