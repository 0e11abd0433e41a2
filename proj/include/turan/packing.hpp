#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

inline constexpr int kMaxPatternOrder = 10;
inline constexpr int kMaxPackingK = 6;

/// A connected graph on 1..10 vertices used as the forbidden unit in kH.
class PatternGraph {
 public:
  explicit PatternGraph(Graph g);

  static PatternGraph p3();

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  bool is_p3() const noexcept { return is_p3_; }
  /// Canonical graph6 of the pattern.
  const std::string& id() const noexcept { return id_; }

 private:
  Graph graph_;
  bool is_p3_ = false;
  std::string id_;
};

/// Maximum number of vertex-disjoint (not necessarily induced) copies of P3.
int max_p3_packing(const Graph& g);

/// True iff g contains k vertex-disjoint copies of h. k = 0 is always true.
/// Patterns other than P3 are limited to k <= 6 (CapacityError beyond).
bool has_k_disjoint(const Graph& g, const PatternGraph& h, int k);

/// Maximum packing number of h in g, via has_k_disjoint. Patterns other
/// than P3 throw CapacityError if the answer would exceed 6.
int max_packing(const Graph& g, const PatternGraph& h);

/// True iff h embeds in g as a (not necessarily induced) subgraph.
bool contains_subgraph(const Graph& g, const PatternGraph& h);

/// Vertex sets (as masks, ascending) of all subgraph copies of h in g.
std::vector<Word> copy_vertex_sets(const Graph& g, const PatternGraph& h);

namespace detail {
// Set-packing route used for every pattern except P3; exposed so tests can
// compare it with the P3 branch and bound.
bool has_k_disjoint_generic(const Graph& g, const PatternGraph& h, int k);
}  // namespace detail

}  // namespace turan
