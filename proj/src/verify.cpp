#include "turan/verify.hpp"

#include <algorithm>
#include <sstream>

#include "turan/errors.hpp"
#include "turan/search.hpp"

namespace turan {

std::string to_string(WitnessShape shape) {
  switch (shape) {
    case WitnessShape::sandwich_union:
      return "sandwich-union";
    case WitnessShape::subgraph_of_join:
      return "subgraph-of-join";
    case WitnessShape::both:
      return "both";
    case WitnessShape::neither:
      return "neither";
  }
  return "neither";
}

std::string to_string(Conformance c) {
  switch (c) {
    case Conformance::pass:
      return "pass";
    case Conformance::fail:
      return "fail";
    case Conformance::tie:
      return "tie";
  }
  return "fail";
}

bool is_sandwiched(const Graph& g, int k) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  const int clique = 3 * k - 1;
  if (g.order() < clique) throw ArgumentError("is_sandwiched needs order >= 3k-1");
  // S is complete with no edges leaving it, so it is a whole component.
  for (VertexSet comp : components(g)) {
    if (comp.size() != clique || !is_clique(g, comp)) continue;
    const Word rest = g.vertices().bits() & ~comp.bits();
    bool low_degree = true;
    for (Word w = rest; w && low_degree; w &= w - 1) low_degree = g.degree(std::countr_zero(w)) <= 1;
    if (low_degree) return true;
  }
  return false;
}

namespace {

bool choose_deletion(const Graph& g, int need, int from, Word removed) {
  if (need == 0) {
    const Word kept = g.vertices().bits() & ~removed;
    for (Word w = kept; w; w &= w - 1) {
      if (std::popcount(g.neighbours(std::countr_zero(w)) & kept) > 1) return false;
    }
    return true;
  }
  for (int v = from; v <= g.order() - need; ++v) {
    if (choose_deletion(g, need - 1, v + 1, removed | (Word{1} << v))) return true;
  }
  return false;
}

}  // namespace

bool is_subgraph_of_join(const Graph& g, int k) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (g.order() < k - 1) throw ArgumentError("is_subgraph_of_join needs order >= k-1");
  return choose_deletion(g, k - 1, 0, 0);
}

WitnessShape classify_witness(const Graph& g, int k) {
  const bool sandwich = g.order() >= 3 * k - 1 && is_sandwiched(g, k);
  const bool joined = is_subgraph_of_join(g, k);
  if (sandwich && joined) return WitnessShape::both;
  if (sandwich) return WitnessShape::sandwich_union;
  if (joined) return WitnessShape::subgraph_of_join;
  return WitnessShape::neither;
}

ConjectureReport verify_conjecture(int n, int k, int s, int jobs) {
  if (k < 1 || n < 3 * k) throw ArgumentError("verify_conjecture needs n >= 3k");
  if (s < 3 || s > 3 * k - 1) throw ArgumentError("verify_conjecture needs 3 <= s <= 3k-1");

  const SearchResult found = exact_ex(n, s, k, PatternGraph::p3(), jobs);
  ConjectureReport r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.expected = conjecture_value(n, k, s);
  r.computed = found.value;
  r.value_ok = r.expected == r.computed;
  r.witnesses = found.witnesses;
  r.classes_visited = found.classes_visited;

  const bool join_allowed = s <= k + 1;
  r.characterization_ok = true;
  for (const auto& w : r.witnesses) {
    const WitnessShape shape = classify_witness(graph6_decode(w.form), k);
    r.shapes.push_back(shape);
    const bool allowed = shape == WitnessShape::sandwich_union || shape == WitnessShape::both ||
                         (join_allowed && shape == WitnessShape::subgraph_of_join);
    if (!allowed) r.characterization_ok = false;
  }

  if (binomial(3 * k - 1, s) == f_formula(n, k, s)) {
    r.conformance = Conformance::tie;
  } else {
    r.conformance = r.value_ok && r.characterization_ok ? Conformance::pass : Conformance::fail;
  }
  return r;
}

BoundReport verify_bounds(int n, int k, int s, const PatternGraph& h, int jobs) {
  const ExOracle oracle = h.is_p3() ? ExOracle(ex_p3_closed) : exact_ex_oracle(h);
  const LowerBound lower = thm11_lower(n, k, s, h.order(), oracle);
  BoundReport r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.pattern = h.id();
  r.lower_thm11 = lower.value;
  r.lower_option_union = lower.union_branch;
  r.lower_option_join = lower.join_branch;
  r.upper_thm12 = thm12_upper(n, k, s, h.order(), oracle);
  r.exact = exact_ex(n, s, k, h, jobs).value;
  r.chain_ok = r.lower_thm11 <= *r.exact && *r.exact <= r.upper_thm12;
  return r;
}

nlohmann::json to_json(const ConjectureReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json shapes = nlohmann::json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    witnesses.push_back(r.witnesses[i].form);
    shapes.push_back(to_string(r.shapes[i]));
  }
  return {
      {"n", r.n},
      {"k", r.k},
      {"s", r.s},
      {"expected", r.expected},
      {"computed", r.computed},
      {"value_ok", r.value_ok},
      {"witnesses", witnesses},
      {"classification", shapes},
      {"characterization_ok", r.characterization_ok},
      {"conformance", to_string(r.conformance)},
      {"classes_visited", r.classes_visited},
  };
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json out = {
      {"n", r.n},
      {"k", r.k},
      {"s", r.s},
      {"pattern", r.pattern},
      {"lower_thm11", r.lower_thm11},
      {"lower_option_union", r.lower_option_union},
      {"lower_option_join", r.lower_option_join},
      {"upper_thm12", r.upper_thm12},
      {"exact", r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr)},
      {"chain_ok", r.chain_ok},
  };
  return out;
}

std::string csv_header_conjecture() { return "n,k,s,expected,computed,value_ok,characterization_ok,witness_count"; }

std::string to_csv(const ConjectureReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.k << ',' << r.s << ',' << r.expected << ',' << r.computed << ','
      << (r.value_ok ? "true" : "false") << ',' << (r.characterization_ok ? "true" : "false") << ','
      << r.witnesses.size();
  return out.str();
}

}  // namespace turan
