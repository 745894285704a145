#include <doctest.h>

#include <set>

#include "llt/bound_oracle.hpp"
#include "llt/errors.hpp"
#include "llt/random_instances.hpp"
#include "llt/tree_metrics.hpp"
#include "oracles.hpp"

using namespace llt;

namespace {

BinaryShape perfect7() {
  // Root with two inner children, each carrying two leaves.
  BinaryShape s;
  s.nodes.resize(7);
  s.nodes[0] = {1, 2};
  s.nodes[1] = {3, 4};
  s.nodes[2] = {5, 6};
  return s;
}

BinaryShape left_path(int n) {
  BinaryShape s;
  s.nodes.resize(n);
  for (int i = 0; i + 1 < n; ++i) s.nodes[i].left = i + 1;
  return s;
}

BinaryShape mirror(const BinaryShape& s) {
  BinaryShape out = s;
  for (auto& node : out.nodes) std::swap(node.left, node.right);
  return out;
}

}  // namespace

TEST_SUITE("bound_oracle") {

TEST_CASE("exact binomials") {
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(40, 20) == 137846528820ULL);
}

TEST_CASE("binomial facts at the worked values") {
  const FactCheck hs = hockey_stick_identity(4, 2);  // C(2,2)+C(3,2)+C(4,2) = 10
  CHECK(hs.lhs == 10);
  CHECK(hs.rhs == 10);
  CHECK(hs.holds);

  const FactCheck ratio = binomial_ratio_identity(8, 2);  // C(8,3) = (6/3) C(8,2)
  CHECK(ratio.holds);
  CHECK(binomial(8, 3) == 2 * binomial(8, 2));

  const FactCheck prefix = binomial_prefix_bound(8, 2);  // 37 < 42
  CHECK(prefix.lhs == 2 * 37);
  CHECK(prefix.rhs == 3 * 28);
  CHECK(prefix.holds);

  CHECK_THROWS_AS(binomial_prefix_bound(8, 3), std::domain_error);
}

TEST_CASE("all binomial facts hold through n = 40") {
  for (int h = 0; h <= 40; ++h)
    for (int i = 0; i <= h; ++i) CHECK(hockey_stick_identity(h, i).holds);
  for (int n = 1; n <= 40; ++n)
    for (int k = 0; k + 1 <= n; ++k) CHECK(binomial_ratio_identity(n, k).holds);
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n / 4; ++k) CHECK(binomial_prefix_bound(n, k).holds);
}

TEST_CASE("cost of elementary shapes") {
  CHECK(tree_cost(left_path(6)).cost_prime == 0);
  BinaryShape cherry;
  cherry.nodes.resize(3);
  cherry.nodes[0] = {1, 2};
  CHECK(tree_cost(cherry).cost_prime == 1);
  const TreeCost perfect = tree_cost(perfect7());
  CHECK(perfect.cost_prime == 5);  // 3 at the root, 1 at each inner child
  CHECK(2 * perfect.cost >= perfect.cost_prime);
}

TEST_CASE("right adjustment is idempotent and cost preserving") {
  const BinaryShape p = perfect7();
  CHECK(right_adjust(p).nodes.size() == p.nodes.size());
  enumerate_binary_shapes(7, [&](const BinaryShape& s) {
    const BinaryShape adj = right_adjust(s);
    CHECK(tree_cost(adj).cost_prime == tree_cost(s).cost_prime);
    CHECK(adj.depth() == s.depth());
    const auto sz = adj.subtree_sizes();
    for (const auto& node : adj.nodes) {
      const int l = node.left >= 0 ? sz[node.left] : 0;
      const int r = node.right >= 0 ? sz[node.right] : 0;
      CHECK(l >= r);
    }
    // Adjusting the mirror lands back on an equal-cost adjusted shape.
    const BinaryShape back = right_adjust(mirror(adj));
    CHECK(tree_cost(back).cost_prime == tree_cost(s).cost_prime);
  });
}

TEST_CASE("vocabulary of elementary shapes") {
  const BinaryWordSet zeros = vocabulary(left_path(5));
  CHECK(zeros.words.size() == 5);
  CHECK(zeros.hamming_cost() == 0);

  BinaryShape cherry;
  cherry.nodes.resize(3);
  cherry.nodes[0] = {1, 2};
  const BinaryWordSet words = vocabulary(cherry);
  CHECK(words.words.size() == 3);
  CHECK(words.hamming_cost() == 1);

  CHECK_THROWS_AS(vocabulary(mirror(left_path(3))), validation_error);
}

TEST_CASE("vocabulary words are distinct and short") {
  enumerate_binary_shapes(8, [&](const BinaryShape& s) {
    const BinaryShape adj = right_adjust(s);
    const BinaryWordSet set = vocabulary(adj);
    std::set<std::pair<std::uint32_t, int>> seen;
    for (const auto& w : set.words) {
      CHECK(w.length <= adj.depth());
      seen.insert({w.bits, w.length});
    }
    CHECK(static_cast<int>(seen.size()) == s.size());
  });
}

TEST_CASE("path words certify the cost: identity on all shapes up to 10") {
  for (int n = 1; n <= 10; ++n)
    enumerate_binary_shapes(n, [&](const BinaryShape& s) {
      CHECK(vocabulary(right_adjust(s)).hamming_cost() == tree_cost(s).cost_prime);
    });
}

TEST_CASE("minimum hamming cost closed form at worked values") {
  const HammingCost h31 = min_hamming_cost(3, 1);
  CHECK(h31.value == 1);
  CHECK(h31.max_full_weight == 0);
  CHECK(h31.extra_words == 1);

  const HammingCost h72 = min_hamming_cost(7, 2);
  CHECK(h72.value == 5);
  CHECK(h72.max_full_weight == 1);
  CHECK(h72.extra_words == 1);

  CHECK(min_hamming_cost(4, 2).value == 1);
  CHECK(min_hamming_cost(5, 4).value == 0);  // all weight-0 words suffice
  CHECK_THROWS_AS(min_hamming_cost(8, 2), std::domain_error);  // only 7 words exist
}

TEST_CASE("closed form equals brute force") {
  for (int h = 0; h <= 6; ++h)
    for (int n = 1; n <= 20; ++n) {
      if (static_cast<std::uint64_t>(n) > (std::uint64_t(1) << (h + 1)) - 1) continue;
      CHECK(min_hamming_cost(n, h).value == greedy_hamming_cost(n, h));
    }
}

TEST_CASE("cheapest-first selection is optimal against full subset search") {
  for (int h = 1; h <= 3; ++h)
    for (int n = 1; n <= 8; ++n) {
      if (static_cast<std::uint64_t>(n) > (std::uint64_t(1) << (h + 1)) - 1) continue;
      CHECK(greedy_hamming_cost(n, h) == oracles::subset_min_hamming(n, h));
    }
}

TEST_CASE("hamming cost is monotone non-increasing in the length budget") {
  for (int n = 1; n <= 20; ++n) {
    long long prev = -1;
    for (int h = 0; h <= 8; ++h) {
      if (static_cast<std::uint64_t>(n) > (std::uint64_t(1) << (h + 1)) - 1) continue;
      const long long value = min_hamming_cost(n, h).value;
      if (prev >= 0) CHECK(value <= prev);
      prev = value;
    }
  }
}

TEST_CASE("minimum cost over depth-bounded shapes") {
  CHECK(exhaustive_min_cost(3, 2) == 0);  // the path
  CHECK(exhaustive_min_cost(3, 1) == 1);  // forced cherry
  CHECK_THROWS_AS(exhaustive_min_cost(13, 4, 12), resource_error);
  CHECK_THROWS_AS(exhaustive_min_cost(8, 1), std::domain_error);  // no such shape
  for (int n = 1; n <= 8; ++n)
    for (int h = 0; h <= n - 1; ++h) {
      if (static_cast<std::uint64_t>(n) > (std::uint64_t(1) << (h + 1)) - 1) continue;
      CHECK(exhaustive_min_cost(n, h) == oracles::shape_min_cost(n, h));
    }
}

TEST_CASE("hamming cost lower-bounds the shape cost") {
  for (int n = 1; n <= 10; ++n)
    for (int h = 0; h <= n - 1; ++h) {
      if (static_cast<std::uint64_t>(n) > (std::uint64_t(1) << (h + 1)) - 1) continue;
      CHECK(min_hamming_cost(n, h).value <= exhaustive_min_cost(n, h));
    }
}

TEST_CASE("least binomial index exceeding two thirds of n") {
  CHECK(f_of_h(20, 10) == 2);  // C(11,1) = 11 <= 13.33 < C(11,2) = 55
  CHECK(f_of_h(3, 4) == 1);    // C(5,1) = 5 > 2
  CHECK_THROWS_AS(f_of_h(20, 8), std::domain_error);
  for (int n : {10, 50, 200}) {
    int prev = -1;
    bool first = true;
    for (int h = 2 * (31 - __builtin_clz(n)) + 1; h <= 80; ++h) {
      const int f = f_of_h(n, h);
      if (!first) CHECK(f <= prev);
      prev = f;
      first = false;
    }
  }
}

TEST_CASE("exhaustive line-tree minima at worked values") {
  for (int n = 2; n <= 7; ++n)
    CHECK(exhaustive_min(n, n - 1, TreeStat::weight) == n - 1);  // the path
  CHECK(exhaustive_min(7, 1, TreeStat::covering) == 2);
  CHECK(exhaustive_min(5, 1, TreeStat::weight) == 6);
  CHECK_THROWS_AS(exhaustive_min(9, 2, TreeStat::weight), resource_error);
}

TEST_CASE("scan: depth-1 minima match the star closed forms") {
  for (int n = 3; n <= 7; ++n) {
    const ThetaScan scan = scan_theta_trees(n);
    CHECK(scan.min_covering[1] == min_star_covering(n));
    CHECK(scan.rooted_trees > 0);
    CHECK(scan.degree_bound_holds);
  }
}

TEST_CASE("scan: weight and covering minima never increase with depth") {
  for (int n = 3; n <= 7; ++n) {
    const ThetaScan scan = scan_theta_trees(n);
    for (int h = 2; h <= n - 1; ++h) {
      CHECK(scan.min_weight[h] <= scan.min_weight[h - 1]);
      CHECK(scan.min_covering[h] <= scan.min_covering[h - 1]);
    }
  }
}

TEST_CASE("scan: binary minima dominate half the shape cost") {
  for (int n = 2; n <= 7; ++n) {
    const ThetaScan scan = scan_theta_trees(n);
    for (int h = 1; h <= n - 1; ++h) {
      if (scan.min_binary_weight[h] < 0) continue;
      CHECK(2 * scan.min_binary_weight[h] >= exhaustive_min_cost(n, h));
    }
  }
}

TEST_CASE("analytic bounds at the showcase point") {
  const auto reports = analytic_bounds(32, 1);
  bool saw_covering = false, saw_degree = false;
  for (const auto& r : reports) {
    if (r.kind == "covering-lower") {
      saw_covering = true;
      CHECK(r.analytic == doctest::Approx(1.6));
      CHECK(!r.vacuous);
      REQUIRE(r.exhaustive.has_value());
      CHECK(*r.exhaustive == 15);
      CHECK(r.holds.value());
    }
    if (r.kind == "covering-vs-degree") {
      saw_degree = true;
      REQUIRE(r.exhaustive.has_value());
      CHECK(*r.exhaustive == 15);
      CHECK(r.holds.value());
    }
  }
  CHECK(saw_covering);
  CHECK(saw_degree);
}

TEST_CASE("cost bounds are vacuous at enumerable sizes, and say so") {
  for (int n = 2; n <= 12; ++n)
    for (int h = 1; h <= n - 1; ++h)
      for (const auto& r : analytic_bounds(n, h))
        if (r.kind == "cost-lower-midrange" || r.kind == "cost-lower-deep") {
          CHECK(r.vacuous);
          if (r.exhaustive && r.holds) CHECK(*r.holds);
        }
}

TEST_CASE("non-vacuous bounds stay below the exact values wherever enumerable") {
  for (int n = 2; n <= 8; ++n)
    for (int h = 1; h <= n - 1; ++h)
      for (const auto& r : analytic_bounds(n, h))
        if (!r.vacuous && r.exhaustive) CHECK(r.holds.value());
}

TEST_CASE("hard graph: expensive star forces the tradeoff") {
  const HardGraphReport r5 = hard_graph(5, 100.0);
  CHECK(r5.mst_weight == 103.0);
  CHECK(r5.min_hops_single_star >= 3);  // n - 2
  CHECK(r5.min_psi_lambda == doctest::Approx(3.0));

  const HardGraphReport r4 = hard_graph(4, 100.0);
  CHECK(r4.min_psi_lambda == doctest::Approx(2.0));
  const HardGraphReport r6 = hard_graph(6, 100.0);
  CHECK(r6.min_psi_lambda == doctest::Approx(4.0));
  CHECK(r4.min_psi_lambda < r5.min_psi_lambda);
  CHECK(r5.min_psi_lambda < r6.min_psi_lambda);

  CHECK_THROWS_AS(hard_graph(2, 10.0), std::domain_error);
  CHECK_THROWS_AS(hard_graph(20, 10.0), resource_error);
}

TEST_CASE("enumeration visits the right number of rooted trees") {
  const ThetaScan scan4 = scan_theta_trees(4);
  CHECK(scan4.rooted_trees == 64);  // 4^3 rooted labelled trees
  const ThetaScan scan5 = scan_theta_trees(5);
  CHECK(scan5.rooted_trees == 625);
  std::uint64_t count = 0;
  for_each_theta_tree(5, [&](const RootedTree& t) {
    t.validate();
    ++count;
  });
  CHECK(count == 625);
}

}  // TEST_SUITE
