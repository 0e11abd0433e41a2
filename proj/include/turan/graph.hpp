#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turan {

inline constexpr int kMaxOrder = 64;

using Word = std::uint64_t;

/// Bit mask with the low `n` bits set (n in [0, 64]).
constexpr Word low_bits(int n) noexcept {
  return n >= 64 ? ~Word{0} : ((Word{1} << n) - 1);
}

/// A subset of the vertices [0, 64) packed into one word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Word bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static constexpr VertexSet range(int n) { return VertexSet(low_bits(n)); }

  constexpr Word bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  VertexSet with(int v) const noexcept { return VertexSet(bits_ | (Word{1} << v)); }
  VertexSet without(int v) const noexcept { return VertexSet(bits_ & ~(Word{1} << v)); }

  std::vector<int> to_vector() const;

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  Word bits_ = 0;
};

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Each vertex's neighbourhood is one 64-bit word, so intersections and
/// degree queries are single instructions. Graphs are built through
/// GraphBuilder or the free builder functions and never change afterwards;
/// every combinator returns a new value.
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return order_; }
  Word neighbours(int v) const noexcept { return adj_[v]; }
  bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }
  int max_degree() const noexcept;
  int edge_count() const noexcept;
  VertexSet vertices() const noexcept { return VertexSet::range(order_); }

  /// Edges (u, v) with u < v, in column-major order (v ascending, then u).
  std::vector<std::pair<int, int>> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  /// Relabels vertex v as perm[v]; perm must be a permutation of [0, order).
  Graph permuted(std::span<const int> perm) const;

  Graph complement() const;

  /// Checks symmetry, irreflexivity and the no-stray-bits invariant.
  bool well_formed() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  friend class GraphBuilder;

  int order_ = 0;
  std::array<Word, kMaxOrder> adj_{};
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int order);
  /// Starts from a copy of an existing graph.
  static GraphBuilder from(const Graph& g);

  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  int order() const noexcept { return graph_.order_; }
  Graph build() const { return graph_; }

 private:
  void check_pair(int u, int v) const;

  Graph graph_;
};

Graph make_graph(int order, std::initializer_list<std::pair<int, int>> edges);

Graph make_empty(int n);
Graph make_complete(int n);
Graph make_matching(int n);
Graph make_path(int n);
Graph make_cycle(int n);
/// c triangles sharing vertex 0; triangle i uses vertices 2i-1 and 2i.
Graph make_fan(int c);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
/// Subgraph induced by `s`, vertices renumbered in increasing order.
Graph induced(const Graph& g, VertexSet s);
Graph remove_vertices(const Graph& g, VertexSet s);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);

/// graph6 encoding (orders up to 64; the 4-byte header form is used for 63 and 64).
std::string graph6_encode(const Graph& g);
/// Strict graph6 decoding; throws ParseError with the offending byte offset.
Graph graph6_decode(std::string_view text);
/// Decodes a newline-delimited graph6 stream. Blank lines and an optional
/// ">>graph6<<" header are skipped.
std::vector<Graph> graph6_decode_stream(std::string_view text);

}  // namespace turan
