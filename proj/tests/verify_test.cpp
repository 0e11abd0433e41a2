#include <gtest/gtest.h>

#include <mutex>

#include "oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/search.hpp"
#include "turan/verify.hpp"

namespace turan {
namespace {

// Brute force: some (3k-1)-set is a clique with no edges leaving it, and
// every other vertex has degree at most 1.
bool brute_sandwiched(const Graph& g, int k) {
  const int n = g.order();
  const int c = 3 * k - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != c) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const bool inside = (mask >> v) & 1u;
      for (int u = 0; u < n && ok; ++u) {
        if (u == v) continue;
        const bool u_in = (mask >> u) & 1u;
        if (inside && u_in && !g.adjacent(u, v)) ok = false;
        if (inside != u_in && g.adjacent(u, v)) ok = false;
      }
      if (!inside && g.degree(v) > 1) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

std::vector<Graph> all_classes(int n) {
  std::mutex mu;
  std::vector<Graph> out;
  enumerate_graphs(n, [](const Graph&) { return true; }, [&](const Graph& g) {
    std::lock_guard lock(mu);
    out.push_back(g);
  });
  return out;
}

TEST(Shapes, SandwichMatchesBruteForce) {
  for (int n = 5; n <= 8; ++n)
    for (const Graph& g : all_classes(n)) ASSERT_EQ(is_sandwiched(g, 2), brute_sandwiched(g, 2)) << graph6_encode(g);
}

TEST(Shapes, SubgraphOfJoinMatchesEmbedding) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= 3; ++k) {
      if (n < k) continue;
      const Graph host = build_conjecture_join(n, k);
      for (const Graph& g : all_classes(n))
        ASSERT_EQ(is_subgraph_of_join(g, k), oracle::embeds(g, host)) << graph6_encode(g) << " k=" << k;
    }
  }
}

TEST(Shapes, Classification) {
  EXPECT_EQ(classify_witness(build_conjecture_union(8, 2), 2), WitnessShape::sandwich_union);
  EXPECT_EQ(classify_witness(build_conjecture_join(8, 2), 2), WitnessShape::subgraph_of_join);
  EXPECT_EQ(classify_witness(make_complete(8), 2), WitnessShape::neither);
  // Deleting any one vertex of K_5 leaves a K_4, so it is not under K_1 + M_4.
  EXPECT_EQ(classify_witness(make_complete(5), 2), WitnessShape::sandwich_union);
  EXPECT_EQ(classify_witness(disjoint_union(make_complete(2), make_empty(1)), 1), WitnessShape::both);
}

TEST(VerifyConjecture, SevenVerticesTriangles) {
  const ConjectureReport r = verify_conjecture(7, 2, 3);
  EXPECT_EQ(r.expected, 10);
  EXPECT_EQ(r.computed, 10);
  EXPECT_TRUE(r.value_ok);
  EXPECT_TRUE(r.characterization_ok);
  EXPECT_EQ(r.conformance, Conformance::pass);
  const std::vector<CanonicalLabel> expected = {
      canonical_label(disjoint_union(make_complete(5), make_empty(2))),
      canonical_label(disjoint_union(make_complete(5), make_complete(2)))};
  std::vector<CanonicalLabel> sorted = expected;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(r.witnesses, sorted);
  for (WitnessShape shape : r.shapes) EXPECT_EQ(shape, WitnessShape::sandwich_union);
}

TEST(VerifyConjecture, LargerCliques) {
  const ConjectureReport r4 = verify_conjecture(6, 2, 4);
  EXPECT_EQ(r4.computed, 5);
  EXPECT_EQ(r4.conformance, Conformance::pass);
  const ConjectureReport r5 = verify_conjecture(8, 2, 5);
  EXPECT_EQ(r5.computed, 1);
  EXPECT_EQ(r5.conformance, Conformance::pass);
}

TEST(VerifyConjecture, ThreeCopies) {
  const ConjectureReport r = verify_conjecture(9, 3, 3);
  EXPECT_EQ(r.computed, 56);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0], canonical_label(disjoint_union(make_complete(8), make_empty(1))));
  EXPECT_EQ(r.conformance, Conformance::pass);
}

TEST(VerifyConjecture, ArgumentChecks) {
  EXPECT_THROW(verify_conjecture(5, 2, 3), ArgumentError);
  EXPECT_THROW(verify_conjecture(6, 2, 6), ArgumentError);
  EXPECT_THROW(verify_conjecture(6, 2, 2), ArgumentError);
}

TEST(VerifyBounds, P3Chain) {
  const BoundReport r = verify_bounds(6, 2, 3, PatternGraph::p3());
  EXPECT_EQ(r.lower_thm11, 10);
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(*r.exact, 10);
  EXPECT_EQ(r.upper_thm12, 13);
  EXPECT_TRUE(r.chain_ok);
}

TEST(VerifyBounds, TriangleAndPathChains) {
  for (const Graph& p : {make_complete(3), make_path(4)}) {
    const PatternGraph h(p);
    for (int n = 2 * h.order(); n <= 7; ++n) {
      for (int s = 2; s <= 4; ++s) {
        const BoundReport r = verify_bounds(n, 2, s, h);
        ASSERT_TRUE(r.exact.has_value());
        EXPECT_LE(r.lower_thm11, *r.exact);
        EXPECT_LE(*r.exact, r.upper_thm12);
        EXPECT_EQ(r.lower_thm11, std::max(r.lower_option_union, r.lower_option_join));
        EXPECT_TRUE(r.chain_ok);
      }
    }
  }
}

TEST(Output, JsonAndCsv) {
  const ConjectureReport r = verify_conjecture(6, 2, 3);
  const auto j = to_json(r);
  EXPECT_EQ(j.at("computed").get<int>(), 10);
  EXPECT_EQ(j.at("conformance").get<std::string>(), "pass");
  EXPECT_EQ(j.at("witnesses").size(), j.at("classification").size());
  EXPECT_EQ(csv_header_conjecture(), "n,k,s,expected,computed,value_ok,characterization_ok,witness_count");
  EXPECT_EQ(to_csv(r), "6,2,3,10,10,true,true,1");
  const auto b = to_json(verify_bounds(6, 2, 3, PatternGraph::p3()));
  EXPECT_EQ(b.at("exact").get<int>(), 10);
  EXPECT_EQ(b.at("upper_thm12").get<int>(), 13);
}

}  // namespace
}  // namespace turan
