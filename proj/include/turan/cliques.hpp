#pragma once

#include <cstdint>

#include "turan/graph.hpp"

namespace turan {

using CliqueCount = std::uint64_t;

/// Number of s-vertex subsets inducing a complete graph. Throws
/// CapacityError when C(order, s) could exceed 2^63.
CliqueCount count_cliques(const Graph& g, int s);

/// s-cliques whose vertex set contains every vertex of `roots`; zero when
/// the roots are not themselves a clique.
CliqueCount count_cliques_through(const Graph& g, int s, VertexSet roots);

/// Vertices lying in at least one s-clique.
VertexSet clique_support(const Graph& g, int s);

}  // namespace turan
