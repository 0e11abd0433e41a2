#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace turan {

/// Standard binomial: C(a, b) = 0 for b < 0 or b > a, C(a, 0) = 1.
/// Throws CapacityError if the value does not fit in int64.
std::int64_t binomial(std::int64_t a, std::int64_t b);

enum class BinomialConvention {
  standard,
  // Diagnostic only: additionally sets C(0, b) = 1 for b > 0.
  zero_top_one,
};

std::int64_t binomial(std::int64_t a, std::int64_t b, BinomialConvention convention);

/// ex(n, K_i, H) for one fixed pattern H. Implementations must return 1 at
/// i = 0 and n at i = 1, and be safe to call concurrently.
using ExOracle = std::function<std::int64_t(int n, int i)>;

/// C(k-1,s) + (n-k+1) C(k-1,s-1) + floor((n-k+1)/2) C(k-1,s-2): the
/// s-clique count of K_{k-1} + M_{n-k+1}.
std::int64_t f_formula(int n, int k, int s);

/// max{C(3k-1, s), f(n,k,s)} for n >= 3k, s >= 3.
std::int64_t conjecture_value(int n, int k, int s);

/// Large-n threshold for 3 <= s <= k, evaluated exactly; a non-integral
/// leading quotient is rounded up.
std::int64_t g_threshold(int k, int s);

/// C(k-a, s) + (n-k+a) C(a, s-1), for n >= k >= a >= 1.
std::int64_t luo_f(int n, int k, int a, int s);

/// ex(n, K_i, P3): a P3-free graph is a matching.
std::int64_t ex_p3_closed(int n, int i);

struct LowerBound {
  std::int64_t value = 0;
  std::int64_t union_branch = 0;
  std::int64_t join_branch = 0;
};

/// Both disjoint-copies lower-bound constructions for a connected m-vertex
/// pattern: K_{km-1} u G_ex(n-km+1) and K_{k-1} + G_ex(n-k+1).
LowerBound thm11_lower(int n, int k, int s, int m, const ExOracle& oracle,
                       BinomialConvention convention = BinomialConvention::standard);

/// sum_{i=0..s} ex(n-(k-1)m, K_i, H) C((k-1)m, s-i).
std::int64_t thm12_upper(int n, int k, int s, int m, const ExOracle& oracle,
                         BinomialConvention convention = BinomialConvention::standard);

struct BoundReport {
  int n = 0;
  int k = 0;
  int s = 0;
  std::string pattern;  // canonical graph6 of H
  std::int64_t lower_thm11 = 0;
  std::int64_t lower_option_union = 0;
  std::int64_t lower_option_join = 0;
  std::int64_t upper_thm12 = 0;
  std::optional<std::int64_t> exact;
  bool chain_ok = true;
};

}  // namespace turan
