#include "turan/cliques.hpp"

#include "turan/errors.hpp"
#include "turan/formulas.hpp"

namespace turan {

namespace {

// Ordered extension: each clique is counted once, from its lowest vertex
// upward, by intersecting the candidate set with higher neighbours.
CliqueCount extend(const Graph& g, int remaining, Word candidates) {
  if (remaining == 0) return 1;
  if (remaining == 1) return static_cast<CliqueCount>(std::popcount(candidates));
  if (std::popcount(candidates) < remaining) return 0;
  CliqueCount total = 0;
  for (Word w = candidates; w; w &= w - 1) {
    const int v = std::countr_zero(w);
    const Word above = v == 63 ? 0 : ~low_bits(v + 1);
    total += extend(g, remaining - 1, candidates & g.neighbours(v) & above);
  }
  return total;
}

bool exists_extension(const Graph& g, int remaining, Word candidates) {
  if (remaining == 0) return true;
  if (std::popcount(candidates) < remaining) return false;
  if (remaining == 1) return true;
  for (Word w = candidates; w; w &= w - 1) {
    const int v = std::countr_zero(w);
    const Word above = v == 63 ? 0 : ~low_bits(v + 1);
    if (exists_extension(g, remaining - 1, candidates & g.neighbours(v) & above)) return true;
  }
  return false;
}

void check_capacity(int n, int s) {
  if (s < 0) throw ArgumentError("clique size must be nonnegative");
  // binomial() itself throws once the value leaves int64 range.
  try {
    (void)binomial(n, s);
  } catch (const CapacityError&) {
    throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(s) + ") exceeds 64-bit clique counter");
  }
}

}  // namespace

CliqueCount count_cliques(const Graph& g, int s) {
  check_capacity(g.order(), s);
  if (s > g.order()) return 0;
  return extend(g, s, low_bits(g.order()));
}

CliqueCount count_cliques_through(const Graph& g, int s, VertexSet roots) {
  check_capacity(g.order(), s);
  if (!roots.subset_of(g.vertices())) throw ArgumentError("root set exceeds graph order");
  if (roots.size() > s || !is_clique(g, roots)) return 0;
  Word candidates = low_bits(g.order()) & ~roots.bits();
  for (Word w = roots.bits(); w; w &= w - 1) candidates &= g.neighbours(std::countr_zero(w));
  return extend(g, s - roots.size(), candidates);
}

VertexSet clique_support(const Graph& g, int s) {
  if (s < 1) throw ArgumentError("clique_support needs s >= 1");
  Word support = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (exists_extension(g, s - 1, g.neighbours(v))) support |= Word{1} << v;
  }
  return VertexSet(support);
}

}  // namespace turan
