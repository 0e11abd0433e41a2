#pragma once

#include "turan/graph.hpp"
#include "turan/packing.hpp"

namespace turan {

/// K_{3k-1} u M_{n-3k+1}: the maximal member of the sandwich family.
Graph build_conjecture_union(int n, int k);

/// K_{k-1} + M_{n-k+1}; its s-clique count is f_formula(n, k, s).
Graph build_conjecture_join(int n, int k);

/// K_{km-1} u hx, where hx is an H-free graph on n-km+1 vertices.
/// Throws ConstructionError if hx contains H or the result contains kH.
Graph build_thm11_union(int n, int k, const PatternGraph& h, const Graph& hx);

/// K_{k-1} + hx, where hx is an H-free graph on n-k+1 vertices.
Graph build_thm11_join(int n, int k, const PatternGraph& h, const Graph& hx);

}  // namespace turan
