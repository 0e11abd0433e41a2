#include "turan/constructions.hpp"

#include "turan/errors.hpp"

namespace turan {

namespace {

void require_h_free(const PatternGraph& h, const Graph& hx) {
  if (contains_subgraph(hx, h)) throw ConstructionError("supplied extremal graph contains the pattern");
}

Graph require_kh_free(Graph g, const PatternGraph& h, int k) {
  if (has_k_disjoint(g, h, k)) throw ConstructionError("construction contains k disjoint pattern copies");
  return g;
}

}  // namespace

Graph build_conjecture_union(int n, int k) {
  if (k < 1 || n < 3 * k - 1) throw ArgumentError("build_conjecture_union needs k >= 1 and n >= 3k-1");
  return disjoint_union(make_complete(3 * k - 1), make_matching(n - 3 * k + 1));
}

Graph build_conjecture_join(int n, int k) {
  if (k < 1 || n < k) throw ArgumentError("build_conjecture_join needs n >= k >= 1");
  return join(make_complete(k - 1), make_matching(n - k + 1));
}

Graph build_thm11_union(int n, int k, const PatternGraph& h, const Graph& hx) {
  const int clique = k * h.order() - 1;
  if (k < 1 || n < k * h.order()) throw ArgumentError("build_thm11_union needs k >= 1 and n >= km");
  if (hx.order() != n - clique) throw ArgumentError("hx must have n-km+1 vertices");
  if (n > kMaxOrder) throw SizeError("construction exceeds 64 vertices");
  require_h_free(h, hx);
  return require_kh_free(disjoint_union(make_complete(clique), hx), h, k);
}

Graph build_thm11_join(int n, int k, const PatternGraph& h, const Graph& hx) {
  if (k < 1 || n < k * h.order()) throw ArgumentError("build_thm11_join needs k >= 1 and n >= km");
  if (hx.order() != n - k + 1) throw ArgumentError("hx must have n-k+1 vertices");
  if (n > kMaxOrder) throw SizeError("construction exceeds 64 vertices");
  require_h_free(h, hx);
  return require_kh_free(join(make_complete(k - 1), hx), h, k);
}

}  // namespace turan
