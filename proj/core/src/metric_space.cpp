#include "llt/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "llt/errors.hpp"

namespace llt {

namespace {

constexpr double kMetricTolerance = 1e-9;

void validate_matrix(int n, const std::vector<double>& d) {
  std::ostringstream problems;
  int count = 0;
  auto report = [&](const std::string& msg) {
    if (count < 8) problems << "  " << msg << "\n";
    ++count;
  };
  auto at = [&](int i, int j) { return d[static_cast<size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    if (at(i, i) != 0.0)
      report("nonzero diagonal at (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
    for (int j = 0; j < n; ++j) {
      if (at(i, j) < 0.0)
        report("negative entry at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (j > i && at(i, j) != at(j, i))
        report("asymmetry at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (at(i, k) > at(i, j) + at(j, k) + kMetricTolerance)
          report("triangle violation on (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + "," + std::to_string(k + 1) + "): d(i,k) > d(i,j)+d(j,k)");
      }
    }
  if (count > 0) {
    std::ostringstream msg;
    msg << "distance matrix fails metric axioms, " << count << " violation(s):\n"
        << problems.str();
    throw validation_error(msg.str());
  }
}

}  // namespace

MetricSpace MetricSpace::line(int n) {
  if (n < 1) throw validation_error("line metric: n must be positive");
  return MetricSpace(MetricKind::line, n, 1, {});
}

MetricSpace MetricSpace::euclidean(int dim, std::vector<double> coords) {
  if (dim < 1) throw validation_error("euclidean metric: dimension must be positive");
  if (coords.empty() || coords.size() % dim != 0)
    throw validation_error("euclidean metric: coordinate count not a multiple of dim");
  for (double c : coords)
    if (!std::isfinite(c)) throw validation_error("euclidean metric: non-finite coordinate");
  const int n = static_cast<int>(coords.size()) / dim;
  return MetricSpace(MetricKind::euclidean, n, dim, std::move(coords));
}

MetricSpace MetricSpace::matrix(int n, std::vector<double> entries) {
  if (n < 1) throw validation_error("matrix metric: n must be positive");
  if (entries.size() != static_cast<size_t>(n) * n)
    throw validation_error("matrix metric: expected n*n entries");
  for (double e : entries)
    if (!std::isfinite(e)) throw validation_error("matrix metric: non-finite entry");
  validate_matrix(n, entries);
  return MetricSpace(MetricKind::matrix, n, 0, std::move(entries));
}

double MetricSpace::dist(int i, int j) const {
  switch (kind_) {
    case MetricKind::line:
      return static_cast<double>(i < j ? j - i : i - j);
    case MetricKind::euclidean: {
      double s = 0;
      for (int d = 0; d < dim_; ++d) {
        const double t = coord(i, d) - coord(j, d);
        s += t * t;
      }
      return std::sqrt(s);
    }
    case MetricKind::matrix:
      return data_[static_cast<size_t>(i) * n_ + j];
  }
  return 0;
}

MetricSpace MetricSpace::parse(std::istream& in) {
  std::string head;
  if (!(in >> head)) throw validation_error("metric input: empty");
  if (head == "line") {
    int n = 0;
    if (!(in >> n) || n < 1) throw validation_error("metric input: `line N` needs positive N");
    return line(n);
  }
  if (head == "points") {
    int dim = 0;
    if (!(in >> dim) || dim < 1)
      throw validation_error("metric input: `points D` needs positive D");
    std::vector<double> coords;
    double x;
    while (in >> x) coords.push_back(x);
    if (coords.empty()) throw validation_error("metric input: no points given");
    if (coords.size() % dim != 0)
      throw validation_error("metric input: coordinate count not a multiple of D");
    return euclidean(dim, std::move(coords));
  }
  if (head == "matrix") {
    int n = 0;
    if (!(in >> n) || n < 1) throw validation_error("metric input: `matrix N` needs positive N");
    std::vector<double> entries(static_cast<size_t>(n) * n);
    for (auto& e : entries)
      if (!(in >> e)) throw validation_error("metric input: matrix needs N*N entries");
    return matrix(n, std::move(entries));
  }
  throw validation_error("metric input: unknown header `" + head + "` (expected line/points/matrix)");
}

MetricSpace MetricSpace::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open metric file: " + path);
  return parse(in);
}

MetricSpace line_metric(int n) { return MetricSpace::line(n); }
MetricSpace load_metric(std::istream& in) { return MetricSpace::parse(in); }
MetricSpace load_metric_file(const std::string& path) { return MetricSpace::parse_file(path); }

double LinearOrder::total_weight() const {
  return std::accumulate(edge_weights.begin(), edge_weights.end(), 0.0);
}

std::vector<int> LinearOrder::positions() const {
  std::vector<int> pos(order.size());
  for (int q = 0; q < size(); ++q) pos[order[q]] = q;
  return pos;
}

RootedTree minimum_spanning_tree(const MetricSpace& m, int root) {
  const int n = m.size();
  if (root < 0 || root >= n) throw validation_error("mst: root out of range");
  if (n == 1) return RootedTree::singleton();

  std::vector<std::pair<int, int>> chosen;
  chosen.reserve(n - 1);
  if (m.kind() == MetricKind::line) {
    // Unique MST of the line: the consecutive path (any other tree carries a
    // covering edge and is strictly heavier).
    for (int i = 0; i + 1 < n; ++i) chosen.push_back({i, i + 1});
  } else {
    struct E {
      double w;
      int i, j;
    };
    std::vector<E> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.push_back({m.dist(i, j), i, j});
    std::sort(edges.begin(), edges.end(), [](const E& a, const E& b) {
      if (a.w != b.w) return a.w < b.w;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    std::vector<int> dsu(n);
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int x) {
      while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
      return x;
    };
    for (const E& e : edges) {
      const int a = find(e.i), b = find(e.j);
      if (a == b) continue;
      dsu[a] = b;
      chosen.push_back({e.i, e.j});
      if (static_cast<int>(chosen.size()) == n - 1) break;
    }
  }

  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : chosen) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  t.edge_weight.assign(n, 0.0);
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
      t.edge_weight[u] = m.dist(v, u);
      stack.push_back(u);
    }
  }
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  return t;
}

LinearOrder hamiltonian_path(const MetricSpace& m, const RootedTree& mst, int start) {
  const int n = m.size();
  if (mst.size() != n) throw validation_error("hamiltonian_path: tree does not span the metric");
  if (start < 0 || start >= n) throw validation_error("hamiltonian_path: start out of range");

  // Re-root at `start` on the undirected edge set, then take first Euler
  // occurrences (= preorder), neighbors in ascending index.
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    if (v == mst.root) continue;
    adj[v].push_back(mst.parent[v]);
    adj[mst.parent[v]].push_back(v);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  LinearOrder lo;
  lo.order.reserve(n);
  std::vector<char> vis(n, 0);
  std::vector<int> stack = {start};
  vis[start] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    lo.order.push_back(v);
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
      if (!vis[*it]) {
        vis[*it] = 1;
        stack.push_back(*it);
      }
    }
  }
  if (static_cast<int>(lo.order.size()) != n)
    throw validation_error("hamiltonian_path: tree is not spanning");
  lo.edge_weights.reserve(n - 1);
  for (int q = 0; q + 1 < n; ++q)
    lo.edge_weights.push_back(m.dist(lo.order[q], lo.order[q + 1]));
  return lo;
}

}  // namespace llt
