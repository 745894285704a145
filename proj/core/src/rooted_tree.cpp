#include "llt/rooted_tree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "llt/errors.hpp"

namespace llt {

RootedTree RootedTree::singleton() {
  RootedTree t;
  t.root = 0;
  t.parent = {-1};
  t.children = {{}};
  t.edge_weight = {0.0};
  return t;
}

RootedTree RootedTree::from_parents(int root, const std::vector<int>& parents) {
  RootedTree t;
  const int n = static_cast<int>(parents.size());
  t.root = root;
  t.parent = parents;
  t.children.assign(n, {});
  t.edge_weight.assign(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    const int p = parents[v];
    if (p < 0 || p >= n) throw validation_error("from_parents: parent out of range");
    t.children[p].push_back(v);
  }
  t.validate();
  return t;
}

void RootedTree::validate() const {
  const int n = size();
  if (n == 0) throw validation_error("tree: empty vertex set");
  if (root < 0 || root >= n) throw validation_error("tree: root out of range");
  if (parent[root] != -1) throw validation_error("tree: root has a parent");
  if (static_cast<int>(children.size()) != n ||
      static_cast<int>(edge_weight.size()) != n)
    throw validation_error("tree: field sizes disagree");
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int c : children[v]) {
      if (c < 0 || c >= n || parent[c] != v)
        throw validation_error("tree: children/parent maps inconsistent");
      if (seen[c]) throw validation_error("tree: vertex listed as child twice");
      seen[c] = 1;
    }
  }
  // Reachability from the root covers everything iff acyclic and connected.
  std::vector<int> stack = {root};
  int reached = 0;
  std::vector<char> vis(n, 0);
  vis[root] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : children[v]) {
      if (vis[c]) throw validation_error("tree: cycle detected");
      vis[c] = 1;
      stack.push_back(c);
    }
  }
  if (reached != n) throw validation_error("tree: not connected");
}

std::vector<int> RootedTree::depths() const {
  std::vector<int> d(size(), 0);
  for (int v : preorder())
    if (v != root) d[v] = d[parent[v]] + 1;
  return d;
}

int RootedTree::depth() const {
  const auto d = depths();
  return *std::max_element(d.begin(), d.end());
}

int RootedTree::hop_diameter() const {
  const int n = size();
  auto farthest = [&](int s) {
    std::vector<int> dist(n, -1);
    std::vector<int> stack = {s};
    dist[s] = 0;
    int best = s;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
      auto step = [&](int u) {
        if (u >= 0 && dist[u] < 0) {
          dist[u] = dist[v] + 1;
          stack.push_back(u);
        }
      };
      step(parent[v]);
      for (int c : children[v]) step(c);
    }
    return std::pair<int, int>(best, dist[best]);
  };
  const int u = farthest(root).first;
  return farthest(u).second;
}

int RootedTree::max_arity() const {
  int m = 0;
  for (const auto& c : children) m = std::max(m, static_cast<int>(c.size()));
  return m;
}

int RootedTree::max_degree() const {
  int m = 0;
  for (int v = 0; v < size(); ++v)
    m = std::max(m, static_cast<int>(children[v].size()) + (v == root ? 0 : 1));
  return m;
}

double RootedTree::weight() const {
  double w = 0;
  for (int v = 0; v < size(); ++v)
    if (v != root) w += edge_weight[v];
  return w;
}

std::vector<int> RootedTree::subtree_sizes() const {
  std::vector<int> sz(size(), 1);
  const auto order = preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != root) sz[parent[*it]] += sz[*it];
  return sz;
}

std::vector<int> RootedTree::preorder() const {
  std::vector<int> out;
  out.reserve(size());
  std::vector<int> stack = {root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it)
      stack.push_back(*it);
  }
  return out;
}

void RootedTree::set_line_weights() {
  for (int v = 0; v < size(); ++v)
    edge_weight[v] = v == root ? 0.0 : std::abs(v - parent[v]);
}

std::vector<double> RootedTree::root_distances() const {
  std::vector<double> d(size(), 0.0);
  for (int v : preorder())
    if (v != root) d[v] = d[parent[v]] + edge_weight[v];
  return d;
}

void write_tree(std::ostream& out, const RootedTree& tree) {
  out << "root " << tree.root + 1 << "\n";
  char buf[64];
  for (int v = 0; v < tree.size(); ++v) {
    if (v == tree.root) continue;
    std::snprintf(buf, sizeof buf, "%.12g", tree.edge_weight[v]);
    out << tree.parent[v] + 1 << " " << v + 1 << " " << buf << "\n";
  }
}

std::string tree_to_string(const RootedTree& tree) {
  std::ostringstream out;
  write_tree(out, tree);
  return out.str();
}

RootedTree read_tree(std::istream& in) {
  std::string line;
  int root1 = -1;
  std::map<int, std::pair<int, double>> edges;  // child -> (parent, weight), 1-based
  int max_id = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "root") {
      if (!(ls >> root1)) throw validation_error("tree file: malformed root line");
      max_id = std::max(max_id, root1);
      continue;
    }
    int p = 0, c = 0;
    double w = 0;
    try {
      p = std::stoi(first);
    } catch (const std::exception&) {
      throw validation_error("tree file: expected 'root R' or 'parent child weight', got: " + line);
    }
    if (!(ls >> c >> w))
      throw validation_error("tree file: malformed edge line: " + line);
    if (p < 1 || c < 1) throw validation_error("tree file: ids are 1-based");
    if (edges.count(c)) throw validation_error("tree file: duplicate child " + std::to_string(c));
    edges[c] = {p, w};
    max_id = std::max(max_id, std::max(p, c));
  }
  if (root1 < 1) throw validation_error("tree file: missing root line");
  const int n = max_id;
  RootedTree t;
  t.root = root1 - 1;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  t.edge_weight.assign(n, 0.0);
  for (const auto& [c, pw] : edges) {
    t.parent[c - 1] = pw.first - 1;
    t.edge_weight[c - 1] = pw.second;
  }
  for (int v = 0; v < n; ++v) {
    if (v != t.root && t.parent[v] == -1)
      throw validation_error("tree file: vertex " + std::to_string(v + 1) + " has no parent edge");
    if (v != t.root) t.children[t.parent[v]].push_back(v);
  }
  t.validate();
  return t;
}

RootedTree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open tree file: " + path);
  return read_tree(in);
}

}  // namespace llt
