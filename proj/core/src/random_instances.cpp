#include "llt/random_instances.hpp"

#include <algorithm>

#include "llt/errors.hpp"

namespace llt {

namespace {

// Uniform labelled tree via a random Pruefer sequence.
std::vector<std::pair<int, int>> random_tree_edges(int n, Rng& rng) {
  if (n == 1) return {};
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (auto& s : seq) s = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<char> used(n, 0);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int i = 0; i < n - 2; ++i) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    used[leaf] = 1;
    edges.push_back({leaf, seq[i]});
    --degree[seq[i]];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
  edges.push_back({a, b});
  return edges;
}

RootedTree root_edges(int n, const std::vector<std::pair<int, int>>& edges, int root) {
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
  return t;
}

}  // namespace

MetricSpace random_euclidean(int n, int dim, Rng& rng) {
  if (n < 1 || dim < 1) throw validation_error("random_euclidean: bad arguments");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> coords(static_cast<size_t>(n) * dim);
  for (auto& c : coords) c = unit(rng);
  return MetricSpace::euclidean(dim, std::move(coords));
}

MetricSpace random_matrix_metric(int n, Rng& rng) {
  if (n < 1) throw validation_error("random_matrix_metric: bad arguments");
  std::uniform_real_distribution<double> range(1.0, 2.0);
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = range(rng);
  return MetricSpace::matrix(n, std::move(d));
}

RootedTree random_theta_tree(int n, Rng& rng) {
  const auto edges = random_tree_edges(n, rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  RootedTree t = root_edges(n, edges, pick(rng));
  t.set_line_weights();
  return t;
}

RootedTree random_spanning_tree(const MetricSpace& m, Rng& rng) {
  const int n = m.size();
  const auto edges = random_tree_edges(n, rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  RootedTree t = root_edges(n, edges, pick(rng));
  for (int v = 0; v < n; ++v)
    if (v != t.root) t.edge_weight[v] = m.dist(t.parent[v], v);
  return t;
}

}  // namespace llt
