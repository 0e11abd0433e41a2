#include "turan/canon.hpp"

#include <algorithm>
#include <numeric>

#include "turan/errors.hpp"

namespace turan {

namespace {

// Ordered partition of positions [0, n): lab[p] is the vertex at position
// p, and bit p of `ends` marks the last position of a cell.
struct Partition {
  std::array<std::uint8_t, kMaxOrder> lab{};
  Word ends = 0;

  int cell_end(int start) const { return start + std::countr_zero(ends >> start); }
};

using Rows = std::array<Word, kMaxOrder>;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class CanonSearch {
 public:
  CanonSearch(const Graph& g, std::span<const int> colours) : g_(g), n_(g.order()) {
    Partition root;
    std::vector<int> verts(static_cast<std::size_t>(n_));
    std::iota(verts.begin(), verts.end(), 0);
    if (!colours.empty()) {
      if (static_cast<int>(colours.size()) != n_) throw ArgumentError("colouring length does not match order");
      std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return colours[a] < colours[b]; });
    }
    for (int p = 0; p < n_; ++p) {
      root.lab[p] = static_cast<std::uint8_t>(verts[p]);
      const bool last = p + 1 == n_ || (!colours.empty() && colours[verts[p]] != colours[verts[p + 1]]);
      if (last) root.ends |= Word{1} << p;
    }
    if (n_ > 0) {
      refine(root);
      explore(root, 0, 0);
    }
  }

  Labeling result() const {
    Labeling out;
    out.order.assign(best_order_.begin(), best_order_.begin() + n_);
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) pos[out.order[p]] = p;
    out.form = g_.permuted(pos);
    out.generators = generators_;
    UnionFind uf(n_);
    for (const auto& gen : generators_)
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    out.orbit.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out.orbit[v] = uf.find(v);
    return out;
  }

 private:
  // Splits cells by neighbour counts into other cells until every cell is
  // equitable with respect to every other. New cells are ordered by count,
  // which keeps the outcome invariant under relabelling.
  void refine(Partition& part) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int ws = 0; ws < n_;) {
        const int we = part.cell_end(ws);
        Word wmask = 0;
        for (int p = ws; p <= we; ++p) wmask |= Word{1} << part.lab[p];
        for (int cs = 0; cs < n_;) {
          const int ce = part.cell_end(cs);
          if (ce > cs && split_cell(part, cs, ce, wmask)) changed = true;
          cs = ce + 1;
        }
        ws = we + 1;
      }
    }
  }

  bool split_cell(Partition& part, int cs, int ce, Word wmask) const {
    std::array<std::pair<int, std::uint8_t>, kMaxOrder> keyed;
    const int len = ce - cs + 1;
    bool uniform = true;
    for (int i = 0; i < len; ++i) {
      const std::uint8_t v = part.lab[cs + i];
      keyed[i] = {std::popcount(g_.neighbours(v) & wmask), v};
      if (keyed[i].first != keyed[0].first) uniform = false;
    }
    if (uniform) return false;
    std::stable_sort(keyed.begin(), keyed.begin() + len,
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i < len; ++i) {
      part.lab[cs + i] = keyed[i].second;
      if (i + 1 < len && keyed[i].first != keyed[i + 1].first) part.ends |= Word{1} << (cs + i);
    }
    return true;
  }

  Rows leaf_rows(const Partition& part) const {
    std::array<std::uint8_t, kMaxOrder> pos{};
    for (int p = 0; p < n_; ++p) pos[part.lab[p]] = static_cast<std::uint8_t>(p);
    Rows rows{};
    for (int p = 0; p < n_; ++p) {
      Word row = 0;
      for (Word w = g_.neighbours(part.lab[p]); w; w &= w - 1) row |= Word{1} << pos[std::countr_zero(w)];
      rows[p] = row;
    }
    return rows;
  }

  // Automorphism sending reference leaf `from` onto leaf `to`.
  void record_automorphism(const std::array<std::uint8_t, kMaxOrder>& from,
                           const std::array<std::uint8_t, kMaxOrder>& to) {
    Permutation gen{};
    bool identity = true;
    for (int p = 0; p < n_; ++p) {
      gen[from[p]] = to[p];
      if (from[p] != to[p]) identity = false;
    }
    if (!identity) generators_.push_back(gen);
  }

  // Returns the tree level to unwind to, or -1 to continue normally.
  int explore(const Partition& part, int level, int common) {
    const int target = first_nonsingleton(part);
    if (target < 0) return visit_leaf(part, common);

    const int te = part.cell_end(target);
    std::vector<int> tried;
    for (int p = target; p <= te; ++p) {
      const int v = part.lab[p];
      if (!tried.empty() && pruned_by_stabiliser(v, tried)) continue;
      tried.push_back(v);

      Partition child = part;
      std::swap(child.lab[target], child.lab[p]);
      child.ends |= Word{1} << target;
      refine(child);

      prefix_.push_back(v);
      const bool first_path = common == level && (!have_first_ || first_prefix_[level] == v);
      if (!have_first_) first_prefix_.push_back(v);
      const int jump = explore(child, level + 1, first_path ? level + 1 : common);
      prefix_.pop_back();
      if (jump >= 0 && jump < level) return jump;
    }
    return -1;
  }

  int visit_leaf(const Partition& part, int common) {
    const Rows rows = leaf_rows(part);
    if (!have_first_) {
      have_first_ = true;
      first_order_ = part.lab;
      first_rows_ = rows;
      best_order_ = part.lab;
      best_rows_ = rows;
      return -1;
    }
    if (std::equal(rows.begin(), rows.begin() + n_, first_rows_.begin())) {
      record_automorphism(first_order_, part.lab);
      // The subtree hanging off the first path at depth `common` is an
      // image of an already explored one.
      return common;
    }
    const auto cmp = std::lexicographical_compare_three_way(rows.begin(), rows.begin() + n_, best_rows_.begin(),
                                                            best_rows_.begin() + n_);
    if (cmp == std::strong_ordering::equal) {
      record_automorphism(best_order_, part.lab);
    } else if (cmp == std::strong_ordering::greater) {
      best_order_ = part.lab;
      best_rows_ = rows;
    }
    return -1;
  }

  int first_nonsingleton(const Partition& part) const {
    for (int s = 0; s < n_;) {
      const int e = part.cell_end(s);
      if (e > s) return s;
      s = e + 1;
    }
    return -1;
  }

  // Orbits of the subgroup generated by known automorphisms that fix the
  // current prefix pointwise.
  bool pruned_by_stabiliser(int v, const std::vector<int>& tried) const {
    UnionFind uf(n_);
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int x : prefix_) {
        if (gen[x] != x) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int u = 0; u < n_; ++u) uf.unite(u, gen[u]);
    }
    const int root = uf.find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int u) { return uf.find(u) == root; });
  }

  const Graph& g_;
  int n_;
  std::vector<int> prefix_;
  std::vector<int> first_prefix_;
  bool have_first_ = false;
  std::array<std::uint8_t, kMaxOrder> first_order_{};
  Rows first_rows_{};
  std::array<std::uint8_t, kMaxOrder> best_order_{};
  Rows best_rows_{};
  std::vector<Permutation> generators_;
};

}  // namespace

Labeling canonical_labeling(const Graph& g, std::span<const int> colours) {
  return CanonSearch(g, colours).result();
}

CanonicalLabel canonical_label(const Graph& g) { return {graph6_encode(canonical_form(g))}; }

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool same_edge_orbit(std::span<const Permutation> generators, int order, std::pair<int, int> a,
                     std::pair<int, int> b) {
  const auto norm = [](std::pair<int, int> e) { return e.first < e.second ? e : std::pair{e.second, e.first}; };
  a = norm(a);
  b = norm(b);
  if (a == b) return true;
  std::vector<char> seen(static_cast<std::size_t>(order) * order, 0);
  std::vector<std::pair<int, int>> stack{a};
  seen[a.first * order + a.second] = 1;
  while (!stack.empty()) {
    const auto e = stack.back();
    stack.pop_back();
    for (const auto& gen : generators) {
      const auto img = norm({gen[e.first], gen[e.second]});
      if (img == b) return true;
      char& mark = seen[img.first * order + img.second];
      if (!mark) {
        mark = 1;
        stack.push_back(img);
      }
    }
  }
  return false;
}

}  // namespace turan
