#include "llt/sllt_builder.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "llt/errors.hpp"

namespace llt {

namespace {

// Tree distance between consecutive walk vertices via parent climbs; depths
// are small, instances are small.
double tree_distance(const RootedTree& t, const std::vector<int>& depth,
                     const std::vector<double>& root_dist, int a, int b) {
  int ua = a, ub = b;
  while (depth[ua] > depth[ub]) ua = t.parent[ua];
  while (depth[ub] > depth[ua]) ub = t.parent[ub];
  while (ua != ub) {
    ua = t.parent[ua];
    ub = t.parent[ub];
  }
  return root_dist[a] + root_dist[b] - 2 * root_dist[ua];
}

}  // namespace

BreakpointSet breakpoints(const RootedTree& tree, const MetricSpace& m, int rt,
                          double theta) {
  tree.validate();
  if (tree.size() != m.size())
    throw validation_error("breakpoints: tree does not span the metric");
  if (rt != tree.root)
    throw validation_error("breakpoints: rt must be the root of the tree");
  if (!(theta > 0)) throw std::domain_error("breakpoints: theta must be positive");

  const auto walk = tree.preorder();
  const auto depth = tree.depths();
  const auto root_dist = tree.root_distances();

  BreakpointSet set;
  set.theta = theta;
  set.root = rt;
  int prev = walk[0];
  set.points.push_back(prev);
  if (prev != rt) set.star_edges.push_back({prev, m.dist(rt, prev)});
  for (size_t q = 1; q < walk.size(); ++q) {
    const int v = walk[q];
    const double along = tree_distance(tree, depth, root_dist, prev, v);
    if (along > theta * m.dist(rt, v)) {
      set.points.push_back(v);
      set.star_edges.push_back({v, m.dist(rt, v)});
      set.chain_distance_sum += along;
      prev = v;
    }
  }
  return set;
}

RootedTree build_sllt(const RootedTree& tree, const MetricSpace& m, int rt,
                      double theta) {
  if (rt < 0 || rt >= tree.size())
    throw validation_error("build_sllt: rt out of range");
  const BreakpointSet bp = breakpoints(tree, m, rt, theta);
  const int n = tree.size();

  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (int v = 0; v < n; ++v) {
    if (v == tree.root) continue;
    adj[v].push_back({tree.parent[v], tree.edge_weight[v]});
    adj[tree.parent[v]].push_back({v, tree.edge_weight[v]});
  }
  for (const auto& e : bp.star_edges) {
    adj[rt].push_back({e.target, e.weight});
    adj[e.target].push_back({rt, e.weight});
  }

  // Dijkstra with (distance, hops, parent) tie-breaking so the tree shape is
  // reproducible and hop counts are minimal among shortest paths.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<int> hops(n, std::numeric_limits<int>::max());
  std::vector<int> par(n, -1);
  std::vector<char> done(n, 0);
  using Item = std::tuple<double, int, int>;  // dist, hops, vertex
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[rt] = 0;
  hops[rt] = 0;
  pq.push({0.0, 0, rt});
  while (!pq.empty()) {
    auto [d, hp, v] = pq.top();
    pq.pop();
    if (done[v]) continue;
    done[v] = 1;
    for (auto [u, w] : adj[v]) {
      if (done[u]) continue;
      const double nd = d + w;
      const int nh = hp + 1;
      const bool better = nd < dist[u] || (nd == dist[u] && nh < hops[u]) ||
                          (nd == dist[u] && nh == hops[u] && par[u] >= 0 && v < par[u]);
      if (better) {
        dist[u] = nd;
        hops[u] = nh;
        par[u] = v;
        pq.push({nd, nh, u});
      }
    }
  }

  RootedTree out;
  out.root = rt;
  out.parent = par;
  out.children.assign(n, {});
  out.edge_weight.assign(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (v == rt) continue;
    if (par[v] < 0) throw validation_error("build_sllt: augmented graph not connected");
    out.children[par[v]].push_back(v);
    out.edge_weight[v] = dist[v] - dist[par[v]];
  }
  out.validate();
  return out;
}

}  // namespace llt
