#include <gtest/gtest.h>

#include "turan/cliques.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/formulas.hpp"
#include "turan/packing.hpp"

namespace turan {
namespace {

const PatternGraph kP3 = PatternGraph::p3();

TEST(ConjectureUnion, Examples) {
  const Graph g = build_conjecture_union(9, 2);
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(count_cliques(g, 3), 10u);
  EXPECT_EQ(g.edge_count(), 10 + 2);
  EXPECT_THROW(build_conjecture_union(4, 2), ArgumentError);
}

TEST(ConjectureJoin, Examples) {
  const Graph g = build_conjecture_join(23, 2);
  EXPECT_EQ(g.order(), 23);
  EXPECT_EQ(count_cliques(g, 3), 11u);
  EXPECT_EQ(build_conjecture_join(10, 3).max_degree(), 9);
}

TEST(ConjectureFamilies, AreKP3Free) {
  for (int k = 1; k <= 5; ++k) {
    for (int n = 3 * k - 1; n <= 20; ++n) {
      if (n >= 3 * k - 1) EXPECT_FALSE(has_k_disjoint(build_conjecture_union(n, k), kP3, k)) << n << " " << k;
      EXPECT_FALSE(has_k_disjoint(build_conjecture_join(n, k), kP3, k)) << n << " " << k;
    }
  }
}

TEST(ConjectureFamilies, JoinCountsMatchFormulaOnGrid) {
  for (int k = 1; k <= 5; ++k)
    for (int s = 3; s <= 6; ++s)
      for (int n = std::max(k, 3 * k - 1); n <= 30; ++n)
        ASSERT_EQ(static_cast<std::int64_t>(count_cliques(build_conjecture_join(n, k), s)), f_formula(n, k, s));
}

TEST(ConjectureFamilies, SandwichCountIndependentOfMatching) {
  // Dropping matching edges outside the big clique never changes K_s counts
  // for s >= 3.
  for (int s = 3; s <= 5; ++s) {
    const std::uint64_t full = count_cliques(build_conjecture_union(13, 2), s);
    EXPECT_EQ(full, count_cliques(disjoint_union(make_complete(5), make_empty(8)), s));
    EXPECT_EQ(full, count_cliques(disjoint_union(make_complete(5), disjoint_union(make_matching(4), make_empty(4))), s));
  }
}

TEST(Thm11Builders, P3Instances) {
  const Graph u = build_thm11_union(10, 2, kP3, make_matching(5));
  EXPECT_EQ(u.order(), 10);
  EXPECT_EQ(count_cliques(u, 3), 10u);
  const Graph j = build_thm11_join(10, 2, kP3, make_matching(9));
  EXPECT_EQ(j.order(), 10);
  EXPECT_EQ(count_cliques(j, 3), 4u);
  EXPECT_FALSE(has_k_disjoint(j, kP3, 2));
}

TEST(Thm11Builders, RejectBadInputs) {
  EXPECT_THROW(build_thm11_union(10, 2, kP3, make_path(5)), ConstructionError);
  EXPECT_THROW(build_thm11_join(10, 2, kP3, make_path(9)), ConstructionError);
  EXPECT_THROW(build_thm11_union(10, 2, kP3, make_matching(4)), ArgumentError);
}

TEST(Thm11Builders, TriangleInstance) {
  const PatternGraph k3(make_complete(3));
  // K_5 u C_5: C_5 is triangle-free and the whole graph is 2K_3-free.
  const Graph u = build_thm11_union(10, 2, k3, make_cycle(5));
  EXPECT_FALSE(has_k_disjoint(u, k3, 2));
  EXPECT_EQ(count_cliques(u, 3), 10u);
}

}  // namespace
}  // namespace turan
