#include "turan/formulas.hpp"

#include <algorithm>
#include <limits>

#include "turan/errors.hpp"

namespace turan {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw CapacityError(std::string(what) + " overflows int64");
  }
  return static_cast<std::int64_t>(v);
}

std::string args(std::initializer_list<int> xs) {
  std::string out = "(";
  for (int x : xs) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + ")";
}

}  // namespace

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Wide acc = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    acc = acc * (a - b + i) / i;
    if (acc > std::numeric_limits<std::int64_t>::max()) throw CapacityError("binomial overflows int64");
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t binomial(std::int64_t a, std::int64_t b, BinomialConvention convention) {
  if (convention == BinomialConvention::zero_top_one && a == 0 && b > 0) return 1;
  return binomial(a, b);
}

std::int64_t f_formula(int n, int k, int s) {
  if (k < 1 || n < k || s < 0) throw ArgumentError("f_formula needs n >= k >= 1, s >= 0; got " + args({n, k, s}));
  const Wide rest = n - k + 1;
  const Wide v = Wide{binomial(k - 1, s)} + rest * binomial(k - 1, s - 1) + (rest / 2) * binomial(k - 1, s - 2);
  return narrow(v, "f_formula");
}

std::int64_t conjecture_value(int n, int k, int s) {
  if (k < 1 || n < 3 * k || s < 3) {
    throw ArgumentError("conjecture_value needs k >= 1, n >= 3k, s >= 3; got " + args({n, k, s}));
  }
  return std::max(binomial(3 * k - 1, s), f_formula(n, k, s));
}

std::int64_t g_threshold(int k, int s) {
  if (s < 3 || s > k) throw ArgumentError("g_threshold needs 3 <= s <= k; got " + args({k, s}));
  const std::int64_t denom = binomial(k - 2, s - 2);
  if (denom == 0) throw ArgumentError("C(k-2, s-2) vanishes");
  std::int64_t top = 0;
  for (int x : {s, s - 1, s - 2}) top = std::max(top, binomial(3 * k - 3, x));
  const Wide num = Wide{top} * (9 * k - 8);
  const Wide lead = (num + denom - 1) / denom;
  return narrow(lead + k + 1, "g_threshold");
}

std::int64_t luo_f(int n, int k, int a, int s) {
  if (a < 1 || a > k || k > n) throw ArgumentError("luo_f needs n >= k >= a >= 1; got " + args({n, k, a, s}));
  const Wide v = Wide{binomial(k - a, s)} + Wide{n - k + a} * binomial(a, s - 1);
  return narrow(v, "luo_f");
}

std::int64_t ex_p3_closed(int n, int i) {
  if (n < 0 || i < 0) throw ArgumentError("ex_p3_closed needs n, i >= 0");
  switch (i) {
    case 0:
      return 1;
    case 1:
      return n;
    case 2:
      return n / 2;
    default:
      return 0;
  }
}

LowerBound thm11_lower(int n, int k, int s, int m, const ExOracle& oracle, BinomialConvention convention) {
  if (k < 1 || m < 1 || s < 0 || n < k * m) {
    throw ArgumentError("thm11_lower needs k >= 1, m >= 1, s >= 0, n >= km; got " + args({n, k, s, m}));
  }
  LowerBound out;
  out.union_branch = narrow(Wide{oracle(n - k * m + 1, s)} + binomial(k * m - 1, s, convention), "union branch");
  Wide join = 0;
  for (int i = 0; i <= s; ++i) join += Wide{oracle(n - k + 1, i)} * binomial(k - 1, s - i, convention);
  out.join_branch = narrow(join, "join branch");
  out.value = std::max(out.union_branch, out.join_branch);
  return out;
}

std::int64_t thm12_upper(int n, int k, int s, int m, const ExOracle& oracle, BinomialConvention convention) {
  if (k < 1 || m < 3 || s < 1 || n < k * m) {
    throw ArgumentError("thm12_upper needs k >= 1, m >= 3, s >= 1, n >= km; got " + args({n, k, s, m}));
  }
  const int removed = (k - 1) * m;
  Wide total = 0;
  for (int i = 0; i <= s; ++i) total += Wide{oracle(n - removed, i)} * binomial(removed, s - i, convention);
  return narrow(total, "thm12_upper");
}

}  // namespace turan
