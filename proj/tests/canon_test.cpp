#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "turan/canon.hpp"
#include "turan/graph.hpp"

namespace turan {
namespace {

TEST(CanonicalLabel, DistinguishesK5FromC5) {
  EXPECT_NE(canonical_label(make_complete(5)), canonical_label(make_cycle(5)));
  EXPECT_EQ(canonical_label(make_empty(0)).form, "?");
}

TEST(CanonicalLabel, ElevenClassesOnFourVertices) {
  std::set<CanonicalLabel> labels;
  std::set<std::uint64_t> brute;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = oracle::graph_from_mask(4, mask);
    labels.insert(canonical_label(g));
    brute.insert(oracle::brute_canonical(g));
  }
  EXPECT_EQ(brute.size(), 11u);
  EXPECT_EQ(labels.size(), brute.size());
}

TEST(CanonicalLabel, AgreesWithBruteForceOnFiveVertices) {
  // Equal labels iff equal brute-force forms, over all 1024 labelled graphs.
  std::map<CanonicalLabel, std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const Graph g = oracle::graph_from_mask(5, mask);
    const auto [it, fresh] = seen.emplace(canonical_label(g), oracle::brute_canonical(g));
    if (!fresh) EXPECT_EQ(it->second, oracle::brute_canonical(g));
  }
  std::set<std::uint64_t> brute;
  for (const auto& [label, code] : seen) brute.insert(code);
  EXPECT_EQ(brute.size(), seen.size());
  EXPECT_EQ(seen.size(), 34u);
}

TEST(CanonicalLabel, PermutationInvariance) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(n, std::uniform_real_distribution<>(0.1, 0.9)(rng), rng);
    const Graph h = g.permuted(oracle::random_permutation(n, rng));
    ASSERT_EQ(canonical_label(g), canonical_label(h)) << graph6_encode(g);
  }
}

TEST(CanonicalLabel, HighlySymmetricGraphs) {
  std::mt19937_64 rng(5);
  const std::vector<Graph> graphs = {make_complete(16), make_matching(20), make_empty(30),
                                     disjoint_union(make_complete(8), make_complete(8)),
                                     join(make_matching(10), make_matching(10)), make_cycle(24),
                                     make_complete(5).complement(), make_fan(15)};
  for (const Graph& g : graphs) {
    const Graph h = g.permuted(oracle::random_permutation(g.order(), rng));
    EXPECT_EQ(canonical_label(g), canonical_label(h));
  }
  // Petersen graph versus another cubic graph on 10 vertices (prism C5 x K2).
  const Graph petersen = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                         {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  const Graph prism = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                      {3, 8}, {4, 9}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
  EXPECT_FALSE(isomorphic(petersen, prism));
  EXPECT_TRUE(isomorphic(petersen, petersen.permuted(oracle::random_permutation(10, rng))));
}

std::uint64_t group_order_brute(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    if (g.permuted(perm) == g) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t group_order_generated(const std::vector<Permutation>& gens, int n) {
  // Closure of the generated group by breadth-first multiplication.
  Permutation id{};
  for (int v = 0; v < n; ++v) id[v] = static_cast<std::uint8_t>(v);
  std::set<std::vector<int>> seen{std::vector<int>(id.begin(), id.begin() + n)};
  std::vector<std::vector<int>> queue{std::vector<int>(id.begin(), id.begin() + n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& gen : gens) {
      std::vector<int> next(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) next[v] = gen[queue[i][v]];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

TEST(Labeling, GeneratorsSpanTheFullAutomorphismGroup) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, std::uniform_real_distribution<>(0, 1)(rng), rng);
    const Labeling lab = canonical_labeling(g);
    for (const auto& gen : lab.generators) {
      std::vector<int> perm(gen.begin(), gen.begin() + n);
      ASSERT_EQ(g.permuted(perm), g);
    }
    ASSERT_EQ(group_order_generated(lab.generators, n), group_order_brute(g)) << graph6_encode(g);
  }
}

TEST(Labeling, ColouredLabelsRespectColours) {
  // P4 with an end marked differs from P4 with an inner vertex marked.
  const Graph p4 = make_path(4);
  const std::vector<int> end_marked{0, 1, 1, 1};
  const std::vector<int> inner_marked{1, 0, 1, 1};
  const std::vector<int> other_end{1, 1, 1, 0};
  EXPECT_NE(canonical_labeling(p4, end_marked).form, canonical_labeling(p4, inner_marked).form);
  EXPECT_EQ(canonical_labeling(p4, end_marked).form, canonical_labeling(p4, other_end).form);
}

TEST(EdgeOrbits, MatchBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const Labeling lab = canonical_labeling(g);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int b = 1; b < n; ++b) {
      for (int a = 0; a < b; ++a) {
        for (int d = 1; d < n; ++d) {
          for (int c = 0; c < d; ++c) {
            std::iota(perm.begin(), perm.end(), 0);
            bool brute = false;
            do {
              if (g.permuted(perm) != g) continue;
              const int x = perm[a], y = perm[b];
              if ((x == c && y == d) || (x == d && y == c)) brute = true;
            } while (!brute && std::next_permutation(perm.begin(), perm.end()));
            ASSERT_EQ(same_edge_orbit(lab.generators, n, {a, b}, {c, d}), brute);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace turan
