#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "turan/canon.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/packing.hpp"

namespace turan {

enum class WitnessShape {
  sandwich_union,
  subgraph_of_join,
  both,
  neither,
};

std::string to_string(WitnessShape shape);

enum class Conformance {
  pass,
  fail,
  // C(3k-1, s) = f(n, k, s): the two extremal families tie in value.
  tie,
};

std::string to_string(Conformance c);

struct ConjectureReport {
  int n = 0;
  int k = 0;
  int s = 0;
  std::int64_t expected = 0;
  std::int64_t computed = 0;
  bool value_ok = false;
  std::vector<CanonicalLabel> witnesses;
  std::vector<WitnessShape> shapes;  // parallel to witnesses
  bool characterization_ok = false;
  Conformance conformance = Conformance::fail;
  std::uint64_t classes_visited = 0;
};

/// K_{3k-1} u I <= g <= K_{3k-1} u M: some component is a K_{3k-1} and
/// every vertex outside it has degree at most 1.
bool is_sandwiched(const Graph& g, int k);

/// g <= K_{k-1} + M_{n-k+1}: deleting some k-1 vertices leaves max degree <= 1.
bool is_subgraph_of_join(const Graph& g, int k);

WitnessShape classify_witness(const Graph& g, int k);

/// Exact search against the conjectured value, with every optimal class
/// checked against the extremal families allowed for this s.
ConjectureReport verify_conjecture(int n, int k, int s, int jobs = 1);

/// Lower bound, exact value and upper bound for one (n, k, s, H). The
/// oracle for ex(., K_i, H) is closed-form for P3 and enumeration otherwise.
BoundReport verify_bounds(int n, int k, int s, const PatternGraph& h, int jobs = 1);

nlohmann::json to_json(const ConjectureReport& r);
nlohmann::json to_json(const BoundReport& r);

/// n,k,s,expected,computed,value_ok,characterization_ok,witness_count
std::string csv_header_conjecture();
std::string to_csv(const ConjectureReport& r);

}  // namespace turan
