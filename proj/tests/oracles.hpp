#pragma once

// Independent brute-force oracles used only by tests.  Each one recomputes a
// quantity the library produces, through a different route.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "llt/bound_oracle.hpp"
#include "llt/metric_space.hpp"

namespace oracles {

/// Minimum spanning tree weight by enumerating every labelled tree
/// (n^(n-2) of them); feasible for n <= 7.
inline double brute_force_mst_weight(const llt::MetricSpace& m) {
  double best = std::numeric_limits<double>::infinity();
  llt::for_each_theta_tree(
      m.size(),
      [&](const llt::RootedTree& t) {
        if (t.root != 0) return;  // weight is root-independent
        double w = 0;
        for (int v = 0; v < t.size(); ++v)
          if (v != t.root) w += m.dist(t.parent[v], v);
        best = std::min(best, w);
      },
      /*cap=*/7);
  return best;
}

/// Minimum total Hamming weight over ALL n-subsets of distinct words of
/// length <= h (full subset search, not greedy).  h <= 3 keeps 2^(h+1)-1
/// words, so subsets stay enumerable.
inline long long subset_min_hamming(int n, int h) {
  std::vector<int> weights;
  for (int len = 0; len <= h; ++len)
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits)
      weights.push_back(std::popcount(bits));
  const int m = static_cast<int>(weights.size());
  long long best = std::numeric_limits<long long>::max();
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    long long total = 0;
    for (int i : pick) total += weights[i];
    best = std::min(best, total);
    int i = n - 1;
    while (i >= 0 && pick[i] == m - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

/// Minimum cost over binary tree shapes with n nodes and depth <= h, by
/// materializing every shape.
inline long long shape_min_cost(int n, int h) {
  long long best = std::numeric_limits<long long>::max();
  llt::enumerate_binary_shapes(n, [&](const llt::BinaryShape& shape) {
    if (shape.depth() <= h) best = std::min(best, llt::tree_cost(shape).cost_prime);
  });
  return best;
}

}  // namespace oracles
