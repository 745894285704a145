#include "llt/tree_normalize.hpp"

#include <algorithm>
#include <stdexcept>

#include "llt/errors.hpp"

namespace llt {

namespace {

RootedTree rebuild_with_metric(int root, const std::vector<int>& parents,
                               const std::vector<std::vector<int>>& children,
                               const MetricSpace& m) {
  RootedTree t;
  const int n = static_cast<int>(parents.size());
  t.root = root;
  t.parent = parents;
  t.children = children;
  t.edge_weight.assign(n, 0.0);
  for (int v = 0; v < n; ++v)
    if (v != root) t.edge_weight[v] = m.dist(parents[v], v);
  t.validate();
  return t;
}

}  // namespace

RootedTree four_extension(const RootedTree& tree, const MetricSpace& m) {
  tree.validate();
  if (tree.size() != m.size())
    throw validation_error("four_extension: tree does not span the metric");
  const int n = tree.size();
  const auto sizes = tree.subtree_sizes();

  std::vector<int> parents(n, -1);
  std::vector<std::vector<int>> children(n);
  for (int v : tree.preorder()) {
    auto star = tree.children[v];
    std::sort(star.begin(), star.end(), [&](int a, int b) {
      if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
      return a < b;
    });
    const int k = static_cast<int>(star.size());
    for (int i = 0; i < k; ++i) {
      // Heap arrangement over 1-based positions: p = i+1 hangs off position
      // floor((p-1)/2); the first two stay under v.
      const int anchor = i < 2 ? v : star[i / 2 - 1];
      parents[star[i]] = anchor;
      children[anchor].push_back(star[i]);
    }
  }
  return rebuild_with_metric(tree.root, parents, children, m);
}

RootedTree bin_extension(const RootedTree& tree, const MetricSpace& m) {
  tree.validate();
  if (tree.size() != m.size())
    throw validation_error("bin_extension: tree does not span the metric");
  if (tree.max_arity() > 4)
    throw std::domain_error("bin_extension: input must be 4-ary");

  const int n = tree.size();
  std::vector<int> parents(n, -1);
  std::vector<std::vector<int>> children(n);
  for (int v : tree.preorder()) {
    const auto& star = tree.children[v];
    int anchor = v;
    for (int c : star) {
      parents[c] = anchor;
      children[anchor].push_back(c);
      anchor = c;
    }
  }
  return rebuild_with_metric(tree.root, parents, children, m);
}

RootedTree to_binary(const RootedTree& tree, const MetricSpace& m) {
  return bin_extension(four_extension(tree, m), m);
}

RootedTree deepen(const RootedTree& tree) {
  tree.validate();
  const int n = tree.size();
  if (n < 2) throw std::domain_error("deepen: needs at least two vertices");
  const auto depth = tree.depths();
  const int h = *std::max_element(depth.begin(), depth.end());
  if (h >= n - 1) throw std::domain_error("deepen: a path cannot be deepened");

  // Leftmost deepest vertex under the stored child order.
  int deep = -1;
  for (int v : tree.preorder()) {
    if (depth[v] == h) {
      deep = v;
      break;
    }
  }
  std::vector<char> on_path(n, 0);
  for (int v = deep; v != -1; v = tree.parent[v]) on_path[v] = 1;

  int doomed = -1;
  for (int v = 0; v < n; ++v)
    if (tree.children[v].empty() && !on_path[v]) doomed = v;  // largest label wins

  // Twin coordinate deep -/+ 0.5 depending on the side of deep's parent;
  // doubling all keys keeps the ordering exact in integers.
  const int twin_key = deep < tree.parent[deep] ? 2 * deep - 1 : 2 * deep + 1;

  struct Entry {
    int key;
    int old_id;  // -1 for the twin
  };
  std::vector<Entry> entries;
  entries.reserve(n);
  for (int v = 0; v < n; ++v)
    if (v != doomed) entries.push_back({2 * v, v});
  entries.push_back({twin_key, -1});
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.key < b.key; });

  std::vector<int> new_id(n, -1);
  int twin = -1;
  for (int r = 0; r < n; ++r) {
    if (entries[r].old_id < 0)
      twin = r;
    else
      new_id[entries[r].old_id] = r;
  }

  std::vector<int> parents(n, -1);
  for (int v = 0; v < n; ++v) {
    if (v == doomed || v == tree.root) continue;
    parents[new_id[v]] = new_id[tree.parent[v]];
  }
  parents[twin] = new_id[deep];

  RootedTree out;
  out.root = new_id[tree.root];
  out.parent = std::move(parents);
  out.children.assign(n, {});
  out.edge_weight.assign(n, 0.0);
  for (int v = 0; v < n; ++v)
    if (v != out.root) out.children[out.parent[v]].push_back(v);
  out.set_line_weights();
  out.validate();
  return out;
}

}  // namespace llt
