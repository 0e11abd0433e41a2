#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "turan/canon.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/packing.hpp"

namespace turan {

inline constexpr int kMaxEnumerationOrder = 12;

struct EnumerationStats {
  std::uint64_t classes_visited = 0;
  /// Augmentations discarded because the child failed `keep`.
  std::uint64_t nodes_pruned = 0;
};

/// Must be subgraph-closed: deleting an edge never turns true into false.
using KeepPredicate = std::function<bool(const Graph&)>;
/// Receives the canonical form of each class. Called concurrently when jobs > 1.
using VisitSink = std::function<void(const Graph&)>;

/// Visits one representative of every isomorphism class of n-vertex graphs
/// satisfying `keep`, generated by canonical edge augmentation from the
/// empty graph. Subtrees whose root fails `keep` are never expanded.
EnumerationStats enumerate_graphs(int n, const KeepPredicate& keep, const VisitSink& visit, int jobs = 1);

struct SearchResult {
  int n = 0;
  int k = 0;
  int s = 0;
  std::string pattern;  // canonical graph6 of H
  std::int64_t value = 0;
  /// Every optimal class, sorted.
  std::vector<CanonicalLabel> witnesses;
  std::uint64_t classes_visited = 0;
  std::uint64_t nodes_pruned = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// ex(n, K_s, kH) by exhaustive enumeration of kH-free n-vertex graphs.
SearchResult exact_ex(int n, int s, int k, const PatternGraph& h, int jobs = 1);

/// One enumeration pass answering every s in [s_lo, s_hi].
std::vector<SearchResult> exact_ex_range(int n, int s_lo, int s_hi, int k, const PatternGraph& h, int jobs = 1);

/// Same maximisation over an externally supplied list of n-vertex graphs
/// (for example a graph6 stream from another generator). Graphs of other
/// orders are rejected; non-kH-free graphs are skipped.
SearchResult exact_ex_from_graphs(std::span<const Graph> graphs, int n, int s, int k, const PatternGraph& h);

/// ex(n, K_i, H) computed by exact_ex with k = 1 and memoised. Patterns
/// are limited to 5 vertices.
ExOracle exact_ex_oracle(const PatternGraph& h);

/// Keep predicate for kH-freeness.
KeepPredicate kh_free(const PatternGraph& h, int k);

}  // namespace turan
