#include "llt/tree_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "llt/errors.hpp"

namespace llt {

TreeMetrics measure(const RootedTree& tree, const MetricSpace& m,
                    const MeasureOptions& options) {
  tree.validate();
  if (tree.size() != m.size())
    throw validation_error("measure: tree does not span the metric space");

  TreeMetrics out;
  out.depth = tree.depth();
  out.hop_diameter = tree.hop_diameter();
  out.max_arity = tree.max_arity();
  out.max_degree = tree.max_degree();

  double w = 0;
  for (int v = 0; v < tree.size(); ++v)
    if (v != tree.root) w += m.dist(tree.parent[v], v);
  out.weight = w;
  out.mst_weight = options.mst_weight ? *options.mst_weight
                                      : minimum_spanning_tree(m).weight();
  out.lightness = tree.size() == 1 ? 1.0 : out.weight / out.mst_weight;

  if (options.order) out.load = load(tree, *options.order).max;
  if (m.kind() == MetricKind::line) out.max_covering = covering(tree).max;
  return out;
}

LoadProfile load(const RootedTree& tree, const LinearOrder& order) {
  const int n = tree.size();
  if (order.size() != n) throw validation_error("load: order and tree vertex sets differ");
  LoadProfile profile;
  if (n <= 1) return profile;
  const auto pos = order.positions();
  // Difference array over order edges: tree edge (u,v) loads positions
  // [min(pos), max(pos)).
  std::vector<int> diff(n, 0);
  for (int v = 0; v < n; ++v) {
    if (v == tree.root) continue;
    const int a = std::min(pos[v], pos[tree.parent[v]]);
    const int b = std::max(pos[v], pos[tree.parent[v]]);
    ++diff[a];
    --diff[b];
  }
  profile.per_edge.resize(n - 1);
  int run = 0;
  for (int q = 0; q + 1 < n; ++q) {
    run += diff[q];
    profile.per_edge[q] = run;
    profile.max = std::max(profile.max, run);
  }
  return profile;
}

CoveringProfile covering(const RootedTree& tree) {
  const int n = tree.size();
  CoveringProfile profile;
  profile.per_vertex.assign(n, 0);
  std::vector<int> diff(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    if (v == tree.root) continue;
    const int a = std::min(v, tree.parent[v]);
    const int b = std::max(v, tree.parent[v]);
    if (a + 1 < b) {
      ++diff[a + 1];
      --diff[b];
    }
  }
  int run = 0;
  for (int v = 0; v < n; ++v) {
    run += diff[v];
    profile.per_vertex[v] = run;
    profile.max = std::max(profile.max, run);
    profile.sum += run;
  }
  return profile;
}

int star_covering(int n, int center) {
  if (n < 1 || center < 0 || center >= n)
    throw validation_error("star_covering: center out of range");
  return std::max({0, center - 1, n - center - 2});
}

int min_star_covering(int n) {
  if (n < 3) return 0;
  int best = star_covering(n, 0);
  for (int c = 1; c < n; ++c) best = std::min(best, star_covering(n, c));
  return best;
}

namespace {
std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}
}  // namespace

std::string metrics_to_json(const TreeMetrics& m) {
  std::ostringstream out;
  out << "{";
  out << "\"depth\": " << m.depth;
  out << ", \"hop_diameter\": " << m.hop_diameter;
  out << ", \"weight\": " << fmt12(m.weight);
  out << ", \"mst_weight\": " << fmt12(m.mst_weight);
  out << ", \"lightness\": " << fmt12(m.lightness);
  out << ", \"load\": " << (m.load ? std::to_string(*m.load) : "null");
  out << ", \"max_covering\": "
      << (m.max_covering ? std::to_string(*m.max_covering) : "null");
  out << ", \"max_arity\": " << m.max_arity;
  out << ", \"max_degree\": " << m.max_degree;
  out << "}";
  return out.str();
}

}  // namespace llt
