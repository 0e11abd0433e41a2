#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace turan {

template <typename Pred>
std::vector<std::pair<int, int>> pair_orbit_representatives(std::span<const Permutation> generators, int order,
                                                            Pred pick) {
  const auto index = [order](int u, int v) { return u < v ? u * order + v : v * order + u; };
  std::vector<char> seen(static_cast<std::size_t>(order) * order, 0);
  std::vector<std::pair<int, int>> reps;
  std::vector<std::pair<int, int>> stack;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u) {
      if (seen[index(u, v)] || !pick(u, v)) continue;
      reps.emplace_back(u, v);
      seen[index(u, v)] = 1;
      stack.assign(1, {u, v});
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        for (const auto& gen : generators) {
          const int x = gen[a];
          const int y = gen[b];
          if (!seen[index(x, y)]) {
            seen[index(x, y)] = 1;
            stack.emplace_back(x, y);
          }
        }
      }
    }
  }
  return reps;
}

}  // namespace turan
