#include "turan/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "turan/cliques.hpp"
#include "turan/errors.hpp"

namespace turan {

namespace {

struct Node {
  Graph graph;
  std::vector<Permutation> automorphisms;
};

// Largest edge (by higher endpoint, then lower) of the canonical form,
// mapped back to the original vertex numbering.
std::pair<int, int> canonical_edge(const Labeling& lab) {
  const Graph& form = lab.form;
  for (int q = form.order() - 1; q > 0; --q) {
    const Word below = form.neighbours(q) & low_bits(q);
    if (below) {
      const int p = 63 - std::countl_zero(below);
      return {lab.order[p], lab.order[q]};
    }
  }
  throw ArgumentError("canonical_edge of an edgeless graph");
}

class Enumerator {
 public:
  Enumerator(int n, const KeepPredicate& keep, const VisitSink& visit) : n_(n), keep_(keep), visit_(visit) {}

  // Accepted children of `node`, each already visited.
  std::vector<Node> expand(const Node& node, EnumerationStats& stats) const {
    std::vector<Node> out;
    const Graph& g = node.graph;
    const auto reps = pair_orbit_representatives(node.automorphisms, n_,
                                                 [&](int u, int v) { return !g.adjacent(u, v); });
    for (auto [u, v] : reps) {
      Graph child = g.with_edge(u, v);
      if (!keep_(child)) {
        ++stats.nodes_pruned;
        continue;
      }
      Labeling lab = canonical_labeling(child);
      if (!same_edge_orbit(lab.generators, n_, {u, v}, canonical_edge(lab))) continue;
      ++stats.classes_visited;
      visit_(lab.form);
      out.push_back(Node{std::move(child), std::move(lab.generators)});
    }
    return out;
  }

  void descend(const Node& node, EnumerationStats& stats) const {
    for (const Node& child : expand(node, stats)) descend(child, stats);
  }

 private:
  int n_;
  const KeepPredicate& keep_;
  const VisitSink& visit_;
};

}  // namespace

EnumerationStats enumerate_graphs(int n, const KeepPredicate& keep, const VisitSink& visit, int jobs) {
  if (n < 0) throw ArgumentError("enumeration order must be nonnegative");
  if (n > kMaxEnumerationOrder) throw CapacityError("enumeration capped at 12 vertices, got " + std::to_string(n));
  if (jobs < 1) throw ArgumentError("jobs must be >= 1");

  EnumerationStats stats;
  const Graph empty = make_empty(n);
  if (!keep(empty)) return stats;
  ++stats.classes_visited;
  visit(empty);

  Enumerator gen(n, keep, visit);
  Node root{empty, canonical_labeling(empty).generators};
  if (jobs == 1) {
    gen.descend(root, stats);
    return stats;
  }

  // Breadth-first until there are enough independent subtrees, then hand
  // them to workers.
  std::vector<Node> frontier{root};
  const std::size_t wanted = static_cast<std::size_t>(jobs) * 8;
  while (!frontier.empty() && frontier.size() < wanted) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      auto kids = gen.expand(node, stats);
      std::move(kids.begin(), kids.end(), std::back_inserter(next));
    }
    frontier = std::move(next);
  }

  std::atomic<std::size_t> cursor{0};
  std::vector<EnumerationStats> partial(static_cast<std::size_t>(jobs));
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) gen.descend(frontier[i], partial[t]);
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& p : partial) {
    stats.classes_visited += p.classes_visited;
    stats.nodes_pruned += p.nodes_pruned;
  }
  return stats;
}

KeepPredicate kh_free(const PatternGraph& h, int k) {
  if (h.is_p3()) return [k](const Graph& g) { return max_p3_packing(g) < k; };
  return [h, k](const Graph& g) { return !has_k_disjoint(g, h, k); };
}

namespace {

void check_search_args(int n, int s_lo, int s_hi, int k) {
  if (n < 0) throw ArgumentError("n must be nonnegative");
  if (n > kMaxEnumerationOrder) throw CapacityError("exact search capped at n <= 12, got " + std::to_string(n));
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (s_lo < 0 || s_hi < s_lo) throw ArgumentError("invalid clique size range");
}

// Running maximum per clique size, with all optimal classes.
class Tally {
 public:
  Tally(int s_lo, int s_hi) : s_lo_(s_lo), best_(static_cast<std::size_t>(s_hi - s_lo + 1), -1),
                              witnesses_(best_.size()) {}

  void offer(const Graph& canonical) {
    std::vector<std::int64_t> counts(best_.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      counts[i] = static_cast<std::int64_t>(count_cliques(canonical, s_lo_ + static_cast<int>(i)));
    }
    std::string label;
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] < best_[i]) continue;
      if (counts[i] > best_[i]) {
        best_[i] = counts[i];
        witnesses_[i].clear();
      }
      if (label.empty()) label = graph6_encode(canonical);
      witnesses_[i].push_back({label});
    }
  }

  std::vector<SearchResult> results(int n, int k, const PatternGraph& h) {
    std::vector<SearchResult> out;
    for (std::size_t i = 0; i < best_.size(); ++i) {
      if (best_[i] < 0) throw ArgumentError("no kH-free graph exists on " + std::to_string(n) + " vertices");
      SearchResult r;
      r.n = n;
      r.k = k;
      r.s = s_lo_ + static_cast<int>(i);
      r.pattern = h.id();
      r.value = best_[i];
      r.witnesses = std::move(witnesses_[i]);
      std::sort(r.witnesses.begin(), r.witnesses.end());
      r.witnesses.erase(std::unique(r.witnesses.begin(), r.witnesses.end()), r.witnesses.end());
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  int s_lo_;
  std::vector<std::int64_t> best_;
  std::vector<std::vector<CanonicalLabel>> witnesses_;
  std::mutex mutex_;
};

}  // namespace

std::vector<SearchResult> exact_ex_range(int n, int s_lo, int s_hi, int k, const PatternGraph& h, int jobs) {
  check_search_args(n, s_lo, s_hi, k);
  const auto start = std::chrono::steady_clock::now();
  Tally tally(s_lo, s_hi);
  EnumerationStats stats;
  if (n < k * h.order()) {
    tally.offer(make_complete(n));
  } else {
    stats = enumerate_graphs(n, kh_free(h, k), [&](const Graph& g) { tally.offer(g); }, jobs);
  }
  auto out = tally.results(n, k, h);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  for (auto& r : out) {
    r.classes_visited = stats.classes_visited;
    r.nodes_pruned = stats.nodes_pruned;
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed);
  }
  return out;
}

SearchResult exact_ex(int n, int s, int k, const PatternGraph& h, int jobs) {
  return exact_ex_range(n, s, s, k, h, jobs).front();
}

SearchResult exact_ex_from_graphs(std::span<const Graph> graphs, int n, int s, int k, const PatternGraph& h) {
  check_search_args(n, s, s, k);
  const auto start = std::chrono::steady_clock::now();
  Tally tally(s, s);
  const auto keep = kh_free(h, k);
  std::uint64_t visited = 0;
  std::uint64_t skipped = 0;
  for (const Graph& g : graphs) {
    if (g.order() != n) throw ArgumentError("input graph of order " + std::to_string(g.order()) + ", expected " +
                                            std::to_string(n));
    if (!keep(g)) {
      ++skipped;
      continue;
    }
    ++visited;
    tally.offer(canonical_form(g));
  }
  auto r = tally.results(n, k, h).front();
  r.classes_visited = visited;
  r.nodes_pruned = skipped;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

ExOracle exact_ex_oracle(const PatternGraph& h) {
  if (h.order() > 5) throw CapacityError("exact_ex_oracle supports patterns on at most 5 vertices");
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::int64_t> values;
  };
  auto memo = std::make_shared<Memo>();
  return [h, memo](int n, int i) -> std::int64_t {
    if (n < 0 || i < 0) throw ArgumentError("oracle arguments must be nonnegative");
    if (i == 0) return 1;
    if (i == 1) return n;
    if (i > n) return 0;
    {
      std::lock_guard lock(memo->mutex);
      if (auto it = memo->values.find({n, i}); it != memo->values.end()) return it->second;
    }
    const std::int64_t v = exact_ex(n, i, 1, h).value;
    std::lock_guard lock(memo->mutex);
    memo->values[{n, i}] = v;
    return v;
  };
}

}  // namespace turan
