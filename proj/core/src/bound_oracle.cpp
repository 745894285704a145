#include "llt/bound_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "llt/errors.hpp"
#include "llt/tree_metrics.hpp"

namespace llt {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return (s < a || s >= kBinomialSaturated) ? kBinomialSaturated : s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kBinomialSaturated / b) return kBinomialSaturated;
  return a * b;
}

int floor_log2(int n) {
  int k = 0;
  while ((1LL << (k + 1)) <= n) ++k;
  return k;
}

// Number of distinct binary words with at most h bits: 2^(h+1) - 1, saturating.
std::uint64_t word_capacity(int h) {
  if (h >= 62) return kBinomialSaturated;
  return (std::uint64_t(1) << (h + 1)) - 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Binomials.
// ---------------------------------------------------------------------------

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) / i stays integral at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (result >= kBinomialSaturated / num) return kBinomialSaturated;
    result = result * num / i;
  }
  return result;
}

FactCheck hockey_stick_identity(int h, int i) {
  if (i < 0 || h < i) throw std::domain_error("hockey_stick_identity: need 0 <= i <= h");
  FactCheck f;
  for (int k = i; k <= h; ++k) f.lhs = sat_add(f.lhs, binomial(k, i));
  f.rhs = binomial(h + 1, i + 1);
  f.holds = f.lhs == f.rhs && f.lhs < kBinomialSaturated;
  return f;
}

FactCheck binomial_ratio_identity(int n, int k) {
  if (n < 0 || k < 0 || k + 1 > n)
    throw std::domain_error("binomial_ratio_identity: need 0 <= k < n");
  FactCheck f;
  f.lhs = sat_mul(static_cast<std::uint64_t>(k) + 1, binomial(n, k + 1));
  f.rhs = sat_mul(static_cast<std::uint64_t>(n - k), binomial(n, k));
  f.holds = f.lhs == f.rhs && f.lhs < kBinomialSaturated;
  return f;
}

FactCheck binomial_prefix_bound(int n, int k) {
  if (n < 0 || k < 0 || k > n / 4)
    throw std::domain_error("binomial_prefix_bound: need 0 <= k <= floor(n/4)");
  FactCheck f;
  std::uint64_t prefix = 0;
  for (int i = 0; i <= k; ++i) prefix = sat_add(prefix, binomial(n, i));
  f.lhs = sat_mul(2, prefix);
  f.rhs = sat_mul(3, binomial(n, k));
  f.holds = f.lhs < f.rhs && f.rhs < kBinomialSaturated;
  return f;
}

// ---------------------------------------------------------------------------
// Binary shapes.
// ---------------------------------------------------------------------------

int BinaryShape::depth() const {
  if (nodes.empty()) return -1;
  std::vector<int> d(nodes.size(), 0);
  int best = 0;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    best = std::max(best, d[v]);
    for (int c : {nodes[v].left, nodes[v].right})
      if (c >= 0) {
        d[c] = d[v] + 1;
        stack.push_back(c);
      }
  }
  return best;
}

std::vector<int> BinaryShape::subtree_sizes() const {
  std::vector<int> sz(nodes.size(), 0);
  // Nodes are created parent-before-child by the enumerator and shape
  // builders; a reverse sweep still works for arbitrary layouts via a stack.
  std::vector<int> order;
  order.reserve(nodes.size());
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : {nodes[v].left, nodes[v].right})
      if (c >= 0) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    sz[v] = 1;
    for (int c : {nodes[v].left, nodes[v].right})
      if (c >= 0) sz[v] += sz[c];
  }
  return sz;
}

namespace {

void gen_shapes(int k, std::vector<BinaryShape::Node>& buf,
                const std::function<void(int)>& cont) {
  if (k == 0) {
    cont(-1);
    return;
  }
  const int my = static_cast<int>(buf.size());
  buf.push_back({});
  for (int left = 0; left <= k - 1; ++left) {
    gen_shapes(left, buf, [&](int lroot) {
      buf[my].left = lroot;
      gen_shapes(k - 1 - left, buf, [&](int rroot) {
        buf[my].right = rroot;
        cont(my);
      });
    });
  }
  buf.resize(my);
}

}  // namespace

void enumerate_binary_shapes(int n, const std::function<void(const BinaryShape&)>& fn) {
  if (n < 1) throw std::domain_error("enumerate_binary_shapes: n must be positive");
  std::vector<BinaryShape::Node> buf;
  buf.reserve(n);
  BinaryShape shape;
  gen_shapes(n, buf, [&](int root) {
    (void)root;  // always 0: the subtree root is allocated first
    shape.nodes = buf;
    fn(shape);
  });
}

TreeCost tree_cost(const BinaryShape& shape) {
  const auto sz = shape.subtree_sizes();
  long long prime = 0, inner = 0;
  for (const auto& node : shape.nodes) {
    if (node.left < 0 && node.right < 0) continue;
    ++inner;
    const long long l = node.left >= 0 ? sz[node.left] : 0;
    const long long r = node.right >= 0 ? sz[node.right] : 0;
    prime += std::min(l, r);
  }
  return {prime, (static_cast<double>(prime) + static_cast<double>(inner)) / 2.0};
}

BinaryShape right_adjust(const BinaryShape& shape) {
  BinaryShape out = shape;
  const auto sz = out.subtree_sizes();
  for (auto& node : out.nodes) {
    const int l = node.left >= 0 ? sz[node.left] : 0;
    const int r = node.right >= 0 ? sz[node.right] : 0;
    if (l < r) std::swap(node.left, node.right);
  }
  return out;
}

long long BinaryWordSet::hamming_cost() const {
  long long total = 0;
  for (const auto& w : words) total += std::popcount(w.bits);
  return total;
}

BinaryWordSet vocabulary(const BinaryShape& adjusted) {
  const auto sz = adjusted.subtree_sizes();
  for (const auto& node : adjusted.nodes) {
    const int l = node.left >= 0 ? sz[node.left] : 0;
    const int r = node.right >= 0 ? sz[node.right] : 0;
    if (l < r) throw validation_error("vocabulary: shape is not right-adjusted");
  }
  BinaryWordSet set;
  set.words.reserve(adjusted.nodes.size());
  struct Frame {
    int node;
    std::uint32_t bits;
    int length;
  };
  std::vector<Frame> stack = {{0, 0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    set.words.push_back({f.bits, f.length});
    const auto& node = adjusted.nodes[f.node];
    if (node.left >= 0) stack.push_back({node.left, f.bits, f.length + 1});
    if (node.right >= 0)
      stack.push_back({node.right, f.bits | (std::uint32_t(1) << f.length), f.length + 1});
  }
  return set;
}

HammingCost min_hamming_cost(int n, int h) {
  if (n < 1) throw std::domain_error("min_hamming_cost: n must be positive");
  if (h < 0) throw std::domain_error("min_hamming_cost: h must be non-negative");
  if (static_cast<std::uint64_t>(n) > word_capacity(h))
    throw std::domain_error("min_hamming_cost: fewer than n words of length <= h exist");
  HammingCost out;
  // Weight class i holds C(h+1, i+1) words; fill classes from weight 0 up.
  long long cumulative = 0;
  int weight = 0;
  while (true) {
    const std::uint64_t cnt = binomial(h + 1, weight + 1);
    if (cumulative + static_cast<long long>(cnt) >= n) break;
    cumulative += static_cast<long long>(cnt);
    out.value += static_cast<long long>(weight) * static_cast<long long>(cnt);
    ++weight;
  }
  out.max_full_weight = weight - 1;
  out.extra_words = n - cumulative;
  out.value += out.extra_words * weight;
  return out;
}

long long greedy_hamming_cost(int n, int h) {
  if (h > 24) throw resource_error("greedy_hamming_cost: h too large to materialize words");
  if (static_cast<std::uint64_t>(n) > word_capacity(h))
    throw std::domain_error("greedy_hamming_cost: fewer than n words of length <= h exist");
  std::vector<int> weights;
  weights.reserve(static_cast<size_t>(word_capacity(h)));
  for (int len = 0; len <= h; ++len)
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << len); ++bits)
      weights.push_back(std::popcount(bits));
  std::sort(weights.begin(), weights.end());
  return std::accumulate(weights.begin(), weights.begin() + n, 0LL);
}

long long exhaustive_min_cost(int n, int h, int cap) {
  if (n < 1) throw std::domain_error("exhaustive_min_cost: n must be positive");
  if (h < 0) throw std::domain_error("exhaustive_min_cost: h must be non-negative");
  if (n > cap) throw resource_error("exhaustive_min_cost: n exceeds the enumeration cap");
  if (static_cast<std::uint64_t>(n) > word_capacity(h))
    throw std::domain_error("exhaustive_min_cost: no binary tree of this depth has n nodes");

  // Minimum splits over (left, right) subtree sizes; the cost contribution of
  // a node is min(|left|, |right|) regardless of the inner layout.
  static std::map<std::pair<int, int>, long long> memo;
  std::function<long long(int, int)> rec = [&](int k, int depth_budget) -> long long {
    if (k <= 1) return 0;
    if (depth_budget >= k - 1) depth_budget = k - 1;  // deeper budgets change nothing
    const auto key = std::make_pair(k, depth_budget);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::uint64_t side_cap = word_capacity(depth_budget - 1);
    long long best = std::numeric_limits<long long>::max();
    for (int right = 0; right <= (k - 1) / 2; ++right) {
      const int left = k - 1 - right;
      if (static_cast<std::uint64_t>(left) > side_cap ||
          static_cast<std::uint64_t>(right) > side_cap)
        continue;
      best = std::min(best, rec(left, depth_budget - 1) + rec(right, depth_budget - 1) + right);
    }
    memo[key] = best;
    return best;
  };
  return rec(n, h);
}

int f_of_h(int n, int h) {
  if (n < 1) throw std::domain_error("f_of_h: n must be positive");
  if (h <= 2 * floor_log2(n))
    throw std::domain_error("f_of_h: defined only for h > 2*floor(log2 n)");
  const std::uint64_t target = 2 * static_cast<std::uint64_t>(n);
  for (int f = 0; f <= h + 1; ++f)
    if (sat_mul(3, binomial(h + 1, f)) > target) return f;
  throw std::logic_error("f_of_h: no f found in range");
}

// ---------------------------------------------------------------------------
// Exhaustive line-tree scans.
// ---------------------------------------------------------------------------

namespace {

// Drives fn over every labelled free tree on n vertices (edge list form).
void for_each_labelled_tree(int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (n == 1) {
    fn({});
    return;
  }
  if (n == 2) {
    fn({{0, 1}});
    return;
  }
  std::vector<int> seq(n - 2, 0);  // Pruefer sequence odometer
  std::vector<int> degree(n);
  std::vector<char> used(n);
  std::vector<std::pair<int, int>> edges(n - 1);
  while (true) {
    // Decode.
    std::fill(degree.begin(), degree.end(), 1);
    for (int x : seq) ++degree[x];
    std::fill(used.begin(), used.end(), 0);
    int e = 0;
    for (int i = 0; i < n - 2; ++i) {
      int leaf = -1;
      for (int v = 0; v < n; ++v)
        if (degree[v] == 1 && !used[v]) {
          leaf = v;
          break;
        }
      used[leaf] = 1;
      edges[e++] = {leaf, seq[i]};
      --degree[seq[i]];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
    edges[e++] = {a, b};
    fn(edges);
    // Advance odometer.
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
}

}  // namespace

ThetaScan scan_theta_trees(int n, int cap) {
  if (n < 1) throw std::domain_error("scan_theta_trees: n must be positive");
  if (n > cap) throw resource_error("scan_theta_trees: n exceeds the enumeration cap");

  ThetaScan scan;
  scan.n = n;
  scan.min_weight.assign(n, -1);
  scan.min_covering.assign(n, -1);
  scan.min_binary_weight.assign(n, -1);

  std::vector<int> chi(n + 1), deg(n), depth(n), stack;
  std::vector<std::vector<int>> adj(n);
  for_each_labelled_tree(n, [&](const std::vector<std::pair<int, int>>& edges) {
    // Root-independent quantities.
    std::fill(chi.begin(), chi.end(), 0);
    std::fill(deg.begin(), deg.end(), 0);
    long long weight = 0;
    for (auto [u, v] : edges) {
      const int a = std::min(u, v), b = std::max(u, v);
      weight += b - a;
      if (a + 1 < b) {
        ++chi[a + 1];
        --chi[b];
      }
      ++deg[u];
      ++deg[v];
    }
    int chi_max = 0, run = 0;
    for (int v = 0; v < n; ++v) {
      run += chi[v];
      chi_max = std::max(chi_max, run);
    }
    int deg_max = 0, over3 = 0;
    for (int v = 0; v < n; ++v) {
      deg_max = std::max(deg_max, deg[v]);
      if (deg[v] > 3) ++over3;
    }
    if (2 * chi_max < deg_max - 2) scan.degree_bound_holds = false;

    for (auto& a : adj) a.clear();
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }

    for (int root = 0; root < n; ++root) {
      std::fill(depth.begin(), depth.end(), -1);
      depth[root] = 0;
      stack.assign(1, root);
      int h = 0;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        h = std::max(h, depth[v]);
        for (int u : adj[v])
          if (depth[u] < 0) {
            depth[u] = depth[v] + 1;
            stack.push_back(u);
          }
      }
      ++scan.rooted_trees;
      auto take_min = [](long long& slot, long long value) {
        if (slot < 0 || value < slot) slot = value;
      };
      take_min(scan.min_weight[h], weight);
      if (scan.min_covering[h] < 0 || chi_max < scan.min_covering[h])
        scan.min_covering[h] = chi_max;
      const bool binary = over3 == 0 && deg[root] <= 2;
      if (binary) take_min(scan.min_binary_weight[h], weight);
    }
  });

  // Binary minima are over depth <= h: prefix-minimize.
  for (int h = 1; h < n; ++h) {
    if (scan.min_binary_weight[h - 1] < 0) continue;
    if (scan.min_binary_weight[h] < 0 ||
        scan.min_binary_weight[h - 1] < scan.min_binary_weight[h])
      scan.min_binary_weight[h] = scan.min_binary_weight[h - 1];
  }
  return scan;
}

long long exhaustive_min(int n, int h, TreeStat stat, int cap) {
  if (h < 0 || h > n - 1) throw std::domain_error("exhaustive_min: h must be in [0, n-1]");
  const ThetaScan scan = scan_theta_trees(n, cap);
  const long long value = stat == TreeStat::weight
                              ? scan.min_weight[h]
                              : static_cast<long long>(scan.min_covering[h]);
  if (value < 0) throw std::domain_error("exhaustive_min: no tree of this exact depth");
  return value;
}

void for_each_theta_tree(int n, const std::function<void(const RootedTree&)>& fn, int cap) {
  if (n < 1) throw std::domain_error("for_each_theta_tree: n must be positive");
  if (n > cap) throw resource_error("for_each_theta_tree: n exceeds the enumeration cap");
  for_each_labelled_tree(n, [&](const std::vector<std::pair<int, int>>& edges) {
    for (int root = 0; root < n; ++root) {
      RootedTree t;
      t.root = root;
      t.parent.assign(n, -1);
      t.children.assign(n, {});
      t.edge_weight.assign(n, 0.0);
      std::vector<std::vector<int>> adj(n);
      for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      for (auto& a : adj) std::sort(a.begin(), a.end());
      std::vector<int> stack = {root};
      std::vector<char> vis(n, 0);
      vis[root] = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
          if (vis[u]) continue;
          vis[u] = 1;
          t.parent[u] = v;
          t.children[v].push_back(u);
          stack.push_back(u);
        }
      }
      t.set_line_weights();
      fn(t);
    }
  });
}

// ---------------------------------------------------------------------------
// Analytic bounds.
// ---------------------------------------------------------------------------

std::vector<BoundReport> analytic_bounds(int n, int h, int enum_cap, int cost_cap) {
  if (n < 1 || h < 0) throw std::domain_error("analytic_bounds: bad arguments");
  std::vector<BoundReport> reports;
  const int lg = floor_log2(n);
  const bool cost_feasible = static_cast<std::uint64_t>(n) <= word_capacity(h);

  auto cost_exhaustive = [&](BoundReport& r, long long scaled_rhs, bool strict) {
    // Compare 3*R against scaled_rhs = 3*analytic in exact integers.
    if (n <= cost_cap && cost_feasible) {
      r.exhaustive = exhaustive_min_cost(n, h, cost_cap);
      const long long lhs = 3 * *r.exhaustive;
      r.holds = strict ? lhs > scaled_rhs : lhs >= scaled_rhs;
    }
  };

  if ((std::uint64_t(1) << h) >= static_cast<std::uint64_t>(n) && h <= 2 * lg) {
    BoundReport r;
    r.kind = "cost-lower-midrange";
    r.n = n;
    r.h = h;
    const long long factor = lg / 8;
    r.analytic = 2.0 * n * factor / 3.0;
    r.vacuous = factor <= 0;
    cost_exhaustive(r, 2LL * n * factor, /*strict=*/false);
    reports.push_back(std::move(r));
  }

  if (h > 2 * lg && h <= n - 1) {
    BoundReport r;
    r.kind = "cost-lower-deep";
    r.n = n;
    r.h = h;
    const long long factor = f_of_h(n, h) - 2;
    r.analytic = 2.0 * n * factor / 3.0;
    r.vacuous = factor <= 0;
    cost_exhaustive(r, 2LL * n * factor, /*strict=*/true);
    reports.push_back(std::move(r));
  }

  if (h >= 1 && 5 * h <= 62 && (std::uint64_t(1) << (5 * h)) <= static_cast<std::uint64_t>(n)) {
    BoundReport r;
    r.kind = "covering-lower";
    r.n = n;
    r.h = h;
    r.analytic = h * std::pow(static_cast<double>(n), 1.0 / h) / 20.0;
    r.vacuous = r.analytic <= 0;
    if (h == 1) {
      r.exhaustive = min_star_covering(n);  // depth-1 trees are exactly the stars
      r.holds = static_cast<double>(*r.exhaustive) > r.analytic - 1e-9;
    } else if (n <= enum_cap) {
      r.exhaustive = exhaustive_min(n, h, TreeStat::covering, enum_cap);
      r.holds = static_cast<double>(*r.exhaustive) > r.analytic - 1e-9;
    }
    reports.push_back(std::move(r));
  }

  if (h == 1 && n >= 2) {
    BoundReport r;
    r.kind = "covering-vs-degree";
    r.n = n;
    r.h = h;
    r.analytic = (n - 3) / 2.0;  // the root of a depth-1 tree has degree n-1
    r.vacuous = n <= 3;
    r.exhaustive = min_star_covering(n);
    r.holds = 2 * *r.exhaustive >= n - 3;
    reports.push_back(std::move(r));
  }

  return reports;
}

// ---------------------------------------------------------------------------
// Hard graph.
// ---------------------------------------------------------------------------

HardGraphReport hard_graph(int n, double star_weight, int cap) {
  if (n < 3) throw std::domain_error("hard_graph: needs n >= 3");
  if (!(star_weight > 0)) throw std::domain_error("hard_graph: star weight must be positive");
  if (n > cap) throw resource_error("hard_graph: n exceeds the enumeration cap");

  // Vertices 0..n-2 form the unit path, vertex n-1 is the hub.
  const int hub = n - 1;
  struct Edge {
    int u, v;
    double w;
    bool star;
  };
  std::vector<Edge> edges;
  for (int i = 0; i + 1 <= n - 2; ++i) edges.push_back({i, i + 1, 1.0, false});
  for (int i = 0; i <= n - 2; ++i) edges.push_back({hub, i, star_weight, true});
  const int m = static_cast<int>(edges.size());

  HardGraphReport report;
  report.n = n;
  report.star_weight = star_weight;
  report.mst_weight = (n - 2) + star_weight;
  report.min_psi_lambda = std::numeric_limits<double>::infinity();
  report.min_hops_single_star = std::numeric_limits<int>::max();

  std::vector<int> pick(n - 1);
  std::iota(pick.begin(), pick.end(), 0);  // lexicographic (n-1)-subsets of edges
  std::vector<int> dsu(n);
  std::vector<std::vector<int>> adj(n);
  std::vector<int> dist(n);
  while (true) {
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int x) {
      while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
      return x;
    };
    bool acyclic = true;
    double weight = 0;
    int stars = 0;
    for (int idx : pick) {
      const auto& e = edges[idx];
      const int a = find(e.u), b = find(e.v);
      if (a == b) {
        acyclic = false;
        break;
      }
      dsu[a] = b;
      weight += e.w;
      if (e.star) ++stars;
    }
    if (acyclic) {
      ++report.spanning_trees;  // n-1 acyclic edges on n vertices always span
      for (auto& a : adj) a.clear();
      for (int idx : pick) {
        adj[edges[idx].u].push_back(edges[idx].v);
        adj[edges[idx].v].push_back(edges[idx].u);
      }
      int diameter = 0;
      for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::vector<int> queue = {s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
          const int v = queue[qi];
          diameter = std::max(diameter, dist[v]);
          for (int u : adj[v])
            if (dist[u] < 0) {
              dist[u] = dist[v] + 1;
              queue.push_back(u);
            }
        }
      }
      const double psi = weight / report.mst_weight;
      report.min_psi_lambda = std::min(report.min_psi_lambda, psi * diameter);
      if (stars == 1)
        report.min_hops_single_star = std::min(report.min_hops_single_star, diameter);
    }
    // Next subset.
    int i = n - 2;
    while (i >= 0 && pick[i] == m - (n - 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  return report;
}

}  // namespace llt
