#include "turan/graph.hpp"

#include <algorithm>

#include "turan/errors.hpp"

namespace turan {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder) {
    throw SizeError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxOrder) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    bits_ |= Word{1} << v;
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (Word w = bits_; w; w &= w - 1) out.push_back(std::countr_zero(w));
  return out;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < order_; ++v) {
    for (Word w = adj_[v] & low_bits(v); w; w &= w - 1) out.emplace_back(std::countr_zero(w), v);
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  return GraphBuilder::from(*this).add_edge(u, v).build();
}

Graph Graph::without_edge(int u, int v) const {
  return GraphBuilder::from(*this).remove_edge(u, v).build();
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_) throw ArgumentError("permutation length does not match order");
  Word seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= order_ || ((seen >> p) & 1U)) throw ArgumentError("not a permutation");
    seen |= Word{1} << p;
  }
  Graph out;
  out.order_ = order_;
  for (int v = 0; v < order_; ++v) {
    Word row = 0;
    for (Word w = adj_[v]; w; w &= w - 1) row |= Word{1} << perm[std::countr_zero(w)];
    out.adj_[perm[v]] = row;
  }
  return out;
}

Graph Graph::complement() const {
  Graph out;
  out.order_ = order_;
  const Word all = low_bits(order_);
  for (int v = 0; v < order_; ++v) out.adj_[v] = ~adj_[v] & all & ~(Word{1} << v);
  return out;
}

bool Graph::well_formed() const noexcept {
  if (order_ < 0 || order_ > kMaxOrder) return false;
  const Word all = low_bits(order_);
  for (int v = 0; v < kMaxOrder; ++v) {
    if (v >= order_) {
      if (adj_[v] != 0) return false;
      continue;
    }
    if (adj_[v] & ~all) return false;
    if ((adj_[v] >> v) & 1U) return false;
    for (Word w = adj_[v]; w; w &= w - 1) {
      if (!adjacent(std::countr_zero(w), v)) return false;
    }
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.order_ == b.order_ && a.adj_ == b.adj_;
}

GraphBuilder GraphBuilder::from(const Graph& g) {
  GraphBuilder b(g.order());
  b.graph_ = g;
  return b;
}

GraphBuilder::GraphBuilder(int order) {
  check_order(order);
  graph_.order_ = order;
}

void GraphBuilder::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= graph_.order_ || v >= graph_.order_) {
    throw ArgumentError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_pair(u, v);
  graph_.adj_[u] |= Word{1} << v;
  graph_.adj_[v] |= Word{1} << u;
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_pair(u, v);
  graph_.adj_[u] &= ~(Word{1} << v);
  graph_.adj_[v] &= ~(Word{1} << u);
  return *this;
}

Graph make_graph(int order, std::initializer_list<std::pair<int, int>> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph make_empty(int n) { return GraphBuilder(n).build(); }

Graph make_complete(int n) {
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) b.add_edge(u, v);
  return b.build();
}

Graph make_matching(int n) {
  GraphBuilder b(n);
  for (int i = 0; 2 * i + 1 < n; ++i) b.add_edge(2 * i, 2 * i + 1);
  return b.build();
}

Graph make_path(int n) {
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return b.build();
}

Graph make_cycle(int n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph make_fan(int c) {
  if (c < 0 || 2 * c + 1 > kMaxOrder) throw SizeError("fan F_" + std::to_string(c) + " exceeds 64 vertices");
  GraphBuilder b(2 * c + 1);
  for (int v = 1; v <= 2 * c; ++v) b.add_edge(0, v);
  for (int i = 1; i <= c; ++i) b.add_edge(2 * i - 1, 2 * i);
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + shift, v + shift);
  return b.build();
}

Graph join(const Graph& g, const Graph& h) {
  const int shift = g.order();
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + shift, v + shift);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, v + shift);
  return b.build();
}

Graph induced(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw ArgumentError("vertex set exceeds graph order");
  const std::vector<int> keep = s.to_vector();
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return b.build();
}

Graph remove_vertices(const Graph& g, VertexSet s) {
  return induced(g, VertexSet(g.vertices().bits() & ~s.bits()));
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  Word unseen = low_bits(g.order());
  while (unseen) {
    Word comp = unseen & (~unseen + 1);
    Word frontier = comp;
    while (frontier) {
      Word next = 0;
      for (Word w = frontier; w; w &= w - 1) next |= g.neighbours(std::countr_zero(w));
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    out.emplace_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_clique(const Graph& g, VertexSet s) {
  for (Word w = s.bits(); w; w &= w - 1) {
    const int v = std::countr_zero(w);
    if ((s.bits() & ~g.neighbours(v)) != (Word{1} << v)) return false;
  }
  return true;
}

// graph6: header byte 63+n for n <= 62, otherwise '~' followed by n in
// three big-endian 6-bit groups. The upper triangle follows column by
// column (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, each
// byte offset by 63, with the final byte zero-padded.

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  auto value_at = [&](std::size_t i) -> int {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside [63,126]", i);
    return c - 63;
  };
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("8-byte graph6 order header unsupported", 1);
    if (text.size() < 4) throw ParseError("truncated graph6 order header", text.size());
    n = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
    if (n <= 62) throw ParseError("non-canonical long order header", 0);
    pos = 4;
  } else {
    n = value_at(0);
    pos = 1;
  }
  if (n > kMaxOrder) throw SizeError("graph6 order " + std::to_string(n) + " exceeds 64");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (text.size() < expected) throw ParseError("truncated graph6 bit section", text.size());
  if (text.size() > expected) throw ParseError("trailing bytes after graph6 bit section", expected);

  GraphBuilder b(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + bit / 6;
      if ((value_at(at) >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bit % 6 != 0) {
    const std::size_t at = pos + bit / 6;
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (value_at(at) & pad_mask) throw ParseError("nonzero graph6 padding bits", at);
  }
  return b.build();
}

std::vector<Graph> graph6_decode_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (!line.empty()) {
      try {
        out.push_back(graph6_decode(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("graph6 stream: ") + e.what(), start + e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace turan
