#include "turan/packing.hpp"

#include <algorithm>
#include <unordered_set>

#include "turan/canon.hpp"
#include "turan/errors.hpp"

namespace turan {

PatternGraph::PatternGraph(Graph g) : graph_(std::move(g)) {
  if (graph_.order() < 1 || graph_.order() > kMaxPatternOrder) {
    throw ArgumentError("pattern order must be in [1, 10], got " + std::to_string(graph_.order()));
  }
  if (!is_connected(graph_)) throw ArgumentError("pattern graph must be connected");
  is_p3_ = graph_.order() == 3 && graph_.edge_count() == 2;
  id_ = canonical_label(graph_).form;
}

PatternGraph PatternGraph::p3() { return PatternGraph(make_path(3)); }

namespace {

// Branch and bound over the lowest vertex that still lies on a P3 inside
// the remaining vertex set: either it joins one of the P3 triples through
// it, or it is discarded.
class P3Packer {
 public:
  explicit P3Packer(const Graph& g) : g_(g) {}

  int run() {
    const Word all = low_bits(g_.order());
    best_ = greedy(all);
    search(all, 0);
    return best_;
  }

 private:
  Word usable(Word rest) const {
    Word hubs = 0;
    for (Word w = rest; w; w &= w - 1) {
      const int v = std::countr_zero(w);
      if (std::popcount(g_.neighbours(v) & rest) >= 2) hubs |= Word{1} << v;
    }
    Word out = hubs;
    for (Word w = hubs; w; w &= w - 1) out |= g_.neighbours(std::countr_zero(w)) & rest;
    return out;
  }

  // Vertex triples carrying a P3 through v, centre-first, in index order.
  std::vector<Word> triples_through(int v, Word rest) const {
    std::vector<Word> out;
    const Word bit_v = Word{1} << v;
    const Word nbrs = g_.neighbours(v) & rest;
    for (Word a = nbrs; a; a &= a - 1) {
      const int x = std::countr_zero(a);
      for (Word b = nbrs & ~low_bits(x + 1); b; b &= b - 1) {
        out.push_back(bit_v | (Word{1} << x) | (b & (~b + 1)));
      }
    }
    for (Word c = nbrs; c; c &= c - 1) {
      const int mid = std::countr_zero(c);
      for (Word e = g_.neighbours(mid) & rest & ~bit_v; e; e &= e - 1) {
        const Word t = bit_v | (Word{1} << mid) | (e & (~e + 1));
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
      }
    }
    return out;
  }

  int greedy(Word rest) const {
    int count = 0;
    for (rest = usable(rest); rest; rest = usable(rest)) {
      const auto ts = triples_through(std::countr_zero(rest), rest);
      rest &= ~ts.front();
      ++count;
    }
    return count;
  }

  void search(Word rest, int count) {
    rest = usable(rest);
    best_ = std::max(best_, count);
    if (count + std::popcount(rest) / 3 <= best_) return;
    const int v = std::countr_zero(rest);
    for (Word t : triples_through(v, rest)) search(rest & ~t, count + 1);
    search(rest & ~(Word{1} << v), count);
  }

  const Graph& g_;
  int best_ = 0;
};

template <typename Visit>
bool embed(const Graph& g, const Graph& h, const std::vector<int>& order, std::vector<int>& image, int depth,
           Word used, Visit& visit) {
  if (depth == static_cast<int>(order.size())) return visit(used);
  const int x = order[depth];
  Word cand = low_bits(g.order()) & ~used;
  for (int i = 0; i < depth; ++i) {
    if (h.adjacent(x, order[i])) cand &= g.neighbours(image[order[i]]);
  }
  const int need = h.degree(x);
  for (Word w = cand; w; w &= w - 1) {
    const int v = std::countr_zero(w);
    if (g.degree(v) < need) continue;
    image[x] = v;
    if (embed(g, h, order, image, depth + 1, used | (Word{1} << v), visit)) return true;
  }
  return false;
}

// Pattern vertices in BFS order, so every vertex after the first has an
// already-placed neighbour.
std::vector<int> bfs_order(const Graph& h) {
  std::vector<int> order{0};
  Word seen = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Word w = h.neighbours(order[i]) & ~seen; w; w &= w - 1) {
      const int v = std::countr_zero(w);
      seen |= Word{1} << v;
      order.push_back(v);
    }
  }
  return order;
}

template <typename Visit>
bool for_each_embedding(const Graph& g, const PatternGraph& h, Visit visit) {
  if (h.order() > g.order()) return false;
  const auto order = bfs_order(h.graph());
  std::vector<int> image(static_cast<std::size_t>(h.order()), -1);
  return embed(g, h.graph(), order, image, 0, 0, visit);
}

class DisjointSearch {
 public:
  DisjointSearch(std::vector<Word> sets, int n, int m) : sets_(std::move(sets)), all_(low_bits(n)), m_(m) {}

  bool find(int k) {
    failed_.assign(static_cast<std::size_t>(k) + 1, {});
    return step(0, k);
  }

 private:
  bool step(Word used, int need) {
    if (need == 0) return true;
    if (std::popcount(all_ & ~used) < need * m_) return false;
    if (failed_[need].contains(used)) return false;
    for (Word s : sets_) {
      if ((s & used) == 0 && step(used | s, need - 1)) return true;
    }
    failed_[need].insert(used);
    return false;
  }

  std::vector<Word> sets_;
  Word all_;
  int m_;
  std::vector<std::unordered_set<Word>> failed_;
};

}  // namespace

int max_p3_packing(const Graph& g) { return P3Packer(g).run(); }

std::vector<Word> copy_vertex_sets(const Graph& g, const PatternGraph& h) {
  std::vector<Word> sets;
  for_each_embedding(g, h, [&](Word used) {
    sets.push_back(used);
    return false;
  });
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

bool contains_subgraph(const Graph& g, const PatternGraph& h) {
  return for_each_embedding(g, h, [](Word) { return true; });
}

namespace detail {

bool has_k_disjoint_generic(const Graph& g, const PatternGraph& h, int k) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (k == 0) return true;
  if (k > kMaxPackingK) throw CapacityError("general pattern packing limited to k <= 6");
  if (k * h.order() > g.order()) return false;
  return DisjointSearch(copy_vertex_sets(g, h), g.order(), h.order()).find(k);
}

}  // namespace detail

bool has_k_disjoint(const Graph& g, const PatternGraph& h, int k) {
  if (k < 0) throw ArgumentError("k must be nonnegative");
  if (h.is_p3()) return max_p3_packing(g) >= k;
  return detail::has_k_disjoint_generic(g, h, k);
}

int max_packing(const Graph& g, const PatternGraph& h) {
  if (h.is_p3()) return max_p3_packing(g);
  int k = 0;
  while (k < kMaxPackingK && (k + 1) * h.order() <= g.order() && has_k_disjoint(g, h, k + 1)) ++k;
  if (k == kMaxPackingK && 7 * h.order() <= g.order()) {
    // Anything past the cap cannot be decided; refuse rather than under-report.
    throw CapacityError("packing number exceeds the k <= 6 search cap");
  }
  return k;
}

}  // namespace turan
