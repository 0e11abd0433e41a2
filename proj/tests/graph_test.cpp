#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "turan/canon.hpp"
#include "turan/cliques.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"

namespace turan {
namespace {

TEST(Builders, EmptyAndComplete) {
  EXPECT_EQ(make_empty(0).order(), 0);
  EXPECT_EQ(make_empty(3).order(), 3);
  EXPECT_EQ(make_empty(3).edge_count(), 0);
  EXPECT_THROW(make_empty(65), SizeError);
  EXPECT_THROW(make_complete(-1), SizeError);

  EXPECT_EQ(make_complete(5).edge_count(), 10);
  EXPECT_EQ(make_complete(1).edge_count(), 0);
  EXPECT_EQ(make_complete(8).edge_count(), 28);
  EXPECT_EQ(make_complete(64).edge_count(), 64 * 63 / 2);
}

TEST(Builders, Matching) {
  const Graph m6 = make_matching(6);
  EXPECT_EQ(m6.edge_count(), 3);
  EXPECT_TRUE(m6.adjacent(4, 5));
  const Graph m7 = make_matching(7);
  EXPECT_EQ(m7.edge_count(), 3);
  EXPECT_EQ(m7.degree(6), 0);
  EXPECT_EQ(make_matching(0).order(), 0);
}

TEST(Builders, Fan) {
  const Graph f2 = make_fan(2);
  EXPECT_EQ(f2.order(), 5);
  EXPECT_EQ(f2.edge_count(), 6);
  EXPECT_TRUE(f2.adjacent(1, 2));
  EXPECT_TRUE(f2.adjacent(3, 4));
  EXPECT_FALSE(f2.adjacent(2, 3));
  EXPECT_EQ(make_fan(0), make_complete(1));
  EXPECT_EQ(oracle::count_cliques(make_fan(11), 3), 11u);
  EXPECT_THROW(make_fan(32), SizeError);
}

TEST(Combinators, UnionAndJoin) {
  const Graph u = disjoint_union(make_complete(5), make_matching(6));
  EXPECT_EQ(u.order(), 11);
  EXPECT_EQ(u.edge_count(), 13);
  EXPECT_EQ(disjoint_union(make_complete(5), make_matching(3)).edge_count(), 11);
  EXPECT_EQ(disjoint_union(make_fan(2), make_empty(0)), make_fan(2));

  const Graph witness = disjoint_union(make_complete(5), make_empty(2));
  EXPECT_EQ(witness.order(), 7);
  EXPECT_EQ(count_cliques(witness, 3), 10u);

  const Graph j = join(make_complete(2), make_matching(4));
  EXPECT_EQ(j.order(), 6);
  for (int v = 2; v < 6; ++v) {
    EXPECT_TRUE(j.adjacent(0, v));
    EXPECT_TRUE(j.adjacent(1, v));
  }
  EXPECT_EQ(join(make_empty(0), make_matching(4)), make_matching(4));
  EXPECT_TRUE(isomorphic(join(make_complete(1), make_matching(4)), make_fan(2)));
  EXPECT_THROW(join(make_complete(40), make_complete(30)), SizeError);
}

TEST(Combinators, Induced) {
  EXPECT_EQ(induced(make_complete(5), VertexSet{1, 3, 4}), make_complete(3));
  EXPECT_EQ(induced(make_matching(6), VertexSet{0, 2, 4}), make_empty(3));
  EXPECT_EQ(induced(make_fan(2), VertexSet{0, 1, 2}), make_complete(3));
  EXPECT_THROW(induced(make_complete(3), VertexSet{5}), ArgumentError);
}

TEST(Combinators, CountsAndValidityOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(static_cast<int>(rng() % 12), 0.4, rng);
    const Graph h = oracle::random_graph(static_cast<int>(rng() % 12), 0.4, rng);
    const Graph u = disjoint_union(g, h);
    const Graph j = join(g, h);
    EXPECT_EQ(u.order(), g.order() + h.order());
    EXPECT_EQ(u.edge_count(), g.edge_count() + h.edge_count());
    EXPECT_EQ(j.edge_count(), u.edge_count() + g.order() * h.order());
    EXPECT_TRUE(u.well_formed());
    EXPECT_TRUE(j.well_formed());
    EXPECT_TRUE(g.complement().well_formed());
    EXPECT_TRUE(induced(j, VertexSet(rng() & low_bits(j.order()))).well_formed());
  }
}

TEST(Builder, RejectsLoopsAndOutOfRange) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), ArgumentError);
  EXPECT_THROW(b.add_edge(0, 3), ArgumentError);
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(graph6_decode("D~{"), make_complete(5));
  EXPECT_EQ(graph6_encode(make_complete(5)), "D~{");
  EXPECT_EQ(graph6_encode(make_empty(0)), "?");
  EXPECT_EQ(graph6_decode("?"), make_empty(0));
  EXPECT_EQ(graph6_encode(make_empty(1)), "@");
  // P3 with centre 1: x(0,1)=1, x(0,2)=0, x(1,2)=1 -> 101000.
  EXPECT_EQ(graph6_encode(make_path(3)), "Bg");
}

TEST(Graph6, LongHeader) {
  const Graph k64 = make_complete(64);
  const std::string text = graph6_encode(k64);
  EXPECT_EQ(text.substr(0, 4), "~?@?");
  EXPECT_EQ(graph6_decode(text), k64);
  const Graph g63 = make_matching(63);
  EXPECT_EQ(graph6_decode(graph6_encode(g63)), g63);
  EXPECT_EQ(graph6_encode(make_empty(62)).front(), static_cast<char>(125));
}

TEST(Graph6, ParseErrors) {
  EXPECT_THROW(graph6_decode("D~"), ParseError);
  EXPECT_THROW(graph6_decode(""), ParseError);
  EXPECT_THROW(graph6_decode("D~{?"), ParseError);
  EXPECT_THROW(graph6_decode("D~\x7f"), ParseError);
  // 'B' + 3 bits: the low three padding bits of the byte must be zero.
  EXPECT_THROW(graph6_decode("Bh"), ParseError);
  EXPECT_THROW(graph6_decode("~?@@"), SizeError);
  try {
    graph6_decode("D~ ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Graph6, StreamSkipsBlankLinesAndHeader) {
  const auto gs = graph6_decode_stream(">>graph6<<D~{\n\nBg\r\n?\n");
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[0], make_complete(5));
  EXPECT_EQ(gs[1], make_path(3));
  EXPECT_EQ(gs[2], make_empty(0));
  EXPECT_THROW(graph6_decode_stream("D~{\nD~\n"), ParseError);
}

TEST(Graph6, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 65);
    const Graph g = oracle::random_graph(n, std::uniform_real_distribution<>(0, 1)(rng), rng);
    const std::string text = graph6_encode(g);
    EXPECT_EQ(graph6_decode(text), g);
    EXPECT_EQ(graph6_encode(graph6_decode(text)), text);
  }
}

}  // namespace
}  // namespace turan
