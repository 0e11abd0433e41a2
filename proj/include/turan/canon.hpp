#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// graph6 text of the canonically relabelled graph. Equal labels iff the
/// underlying graphs are isomorphic.
struct CanonicalLabel {
  std::string form;

  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

using Permutation = std::array<std::uint8_t, kMaxOrder>;

struct Labeling {
  /// order[p] is the original vertex placed at canonical position p.
  std::vector<int> order;
  /// canonical_form = g.permuted(position of each vertex).
  Graph form;
  /// Generators of the full automorphism group (identity omitted).
  std::vector<Permutation> generators;
  /// orbit[v] = smallest vertex in v's automorphism orbit.
  std::vector<int> orbit;
};

/// Exact canonical labelling by equitable refinement and individualisation,
/// with the search tree pruned by automorphisms discovered along the way.
/// `colours`, when given, is a vertex colouring that isomorphisms must
/// preserve; colour classes are placed in ascending colour order.
Labeling canonical_labeling(const Graph& g, std::span<const int> colours = {});

CanonicalLabel canonical_label(const Graph& g);
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// True iff some automorphism generated by `generators` maps the edge
/// {a.first, a.second} onto {b.first, b.second}.
bool same_edge_orbit(std::span<const Permutation> generators, int order, std::pair<int, int> a,
                     std::pair<int, int> b);

/// One representative pair per orbit of unordered vertex pairs under the
/// group generated by `generators`, restricted to pairs accepted by `pick`.
template <typename Pred>
std::vector<std::pair<int, int>> pair_orbit_representatives(std::span<const Permutation> generators, int order,
                                                            Pred pick);

}  // namespace turan

#include "turan/detail/canon_impl.hpp"
