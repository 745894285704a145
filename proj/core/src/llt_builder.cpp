#include "llt/llt_builder.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

#include "llt/errors.hpp"

namespace llt {

namespace {

constexpr std::uint64_t kSaturated = std::uint64_t(1) << 62;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return (s < a || s >= kSaturated) ? kSaturated : s;
}

int ceil_log2(int n) {
  int k = 0;
  while ((std::uint64_t(1) << k) < static_cast<std::uint64_t>(n)) ++k;
  return k;
}

int floor_log2(int n) {
  int k = 0;
  while ((std::uint64_t(1) << (k + 1)) <= static_cast<std::uint64_t>(n)) ++k;
  return k;
}

RootedTree finalize_line_tree(int root, std::vector<int>&& parents) {
  const int n = static_cast<int>(parents.size());
  RootedTree t;
  t.root = root;
  t.parent = std::move(parents);
  t.children.assign(n, {});
  t.edge_weight.assign(n, 0.0);
  for (int v = 0; v < n; ++v)
    if (v != root) t.children[t.parent[v]].push_back(v);  // ascending by coordinate
  t.set_line_weights();
  return t;
}

// Writes the high template for (xi, h) into parents at coordinate offset
// `base`; the block occupies exactly size_high(xi, h) ids.  Returns the root.
int place_high(int xi, int h, int base, std::vector<int>& parents) {
  if (xi == 1) {
    for (int k = 1; k <= h; ++k) parents[base + k] = base + k - 1;
    return base;
  }
  int cur = base;
  int prev_spine = -1;
  for (int i = 1; i <= h + 1; ++i) {
    const int spine = cur++;
    if (prev_spine >= 0) parents[spine] = prev_spine;
    if (i <= h) {
      const int sub_xi = std::min(xi - 1, h - i + 1);
      const int sub_h = h - i;
      const int sub_root = place_high(sub_xi, sub_h, cur, parents);
      parents[sub_root] = spine;
      cur += static_cast<int>(size_high(sub_xi, sub_h));
    }
    prev_spine = spine;
  }
  return base;
}

int place_low(int d, int h, int base, std::vector<int>& parents) {
  if (h == 0) return base;
  const int block = static_cast<int>(size_low(d, h - 1));
  const int left = (d + 1) / 2;
  int cur = base;
  std::vector<int> sub_roots;
  for (int i = 0; i < left; ++i) {
    sub_roots.push_back(place_low(d, h - 1, cur, parents));
    cur += block;
  }
  const int root = cur++;
  for (int i = left; i < d; ++i) {
    sub_roots.push_back(place_low(d, h - 1, cur, parents));
    cur += block;
  }
  for (int r : sub_roots) parents[r] = root;
  return root;
}

int place_balanced(int lo, int hi, std::vector<int>& parents, int parent) {
  if (lo > hi) return -1;
  const int k = hi - lo + 1;
  const int root = lo + (k + 1) / 2 - 1;  // coordinate ceil(k/2) within the block
  parents[root] = parent;
  place_balanced(lo, root - 1, parents, root);
  place_balanced(root + 1, hi, parents, root);
  return root;
}

}  // namespace

std::string ConstructionPlan::regime_name() const {
  switch (regime) {
    case Regime::low: return "low";
    case Regime::mid: return "mid";
    case Regime::high: return "high";
  }
  return "?";
}

std::uint64_t size_high(int xi, int h) {
  if (xi < 1) throw std::domain_error("size_high: xi must be at least 1");
  if (h < xi - 1) throw std::domain_error("size_high: requires h >= xi-1");
  if (xi == 1) return static_cast<std::uint64_t>(h) + 1;

  static std::map<std::pair<int, int>, std::uint64_t> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);

  // Iterative fill keyed on (xi, h); every referenced subproblem has a
  // smaller xi or equal xi with smaller h.
  std::vector<std::pair<int, int>> todo = {{xi, h}};
  while (!todo.empty()) {
    auto [x, hh] = todo.back();
    if (x == 1 || memo.count({x, hh})) {
      todo.pop_back();
      continue;
    }
    bool ready = true;
    std::uint64_t total = static_cast<std::uint64_t>(hh) + 1;
    for (int j = 0; j < hh; ++j) {
      const int sx = std::min(x - 1, j + 1);
      if (sx == 1) {
        total = sat_add(total, static_cast<std::uint64_t>(j) + 1);
        continue;
      }
      auto it = memo.find({sx, j});
      if (it == memo.end()) {
        todo.push_back({sx, j});
        ready = false;
      } else {
        total = sat_add(total, it->second);
      }
    }
    if (ready) {
      memo[{x, hh}] = total;
      todo.pop_back();
    }
  }
  return memo.at({xi, h});
}

RootedTree build_high_tree(int xi, int h) {
  const std::uint64_t n = size_high(xi, h);
  if (n >= kSaturated || n > (std::uint64_t(1) << 31))
    throw resource_error("build_high_tree: template too large to materialize");
  std::vector<int> parents(static_cast<size_t>(n), -1);
  place_high(xi, h, 0, parents);
  return finalize_line_tree(0, std::move(parents));
}

RootedTree build_balanced(int n) {
  if (n < 1) throw std::domain_error("build_balanced: n must be positive");
  std::vector<int> parents(n, -1);
  const int root = place_balanced(0, n - 1, parents, -1);
  return finalize_line_tree(root, std::move(parents));
}

std::uint64_t size_low(int d, int h) {
  if (d < 2) throw std::domain_error("size_low: d must be at least 2");
  if (h < 0) throw std::domain_error("size_low: h must be non-negative");
  std::uint64_t total = 1, power = 1;
  for (int i = 1; i <= h; ++i) {
    power = (power >= kSaturated / d) ? kSaturated : power * d;
    total = sat_add(total, power);
  }
  return total;
}

RootedTree build_low_tree(int d, int h) {
  const std::uint64_t n = size_low(d, h);
  if (n >= kSaturated || n > (std::uint64_t(1) << 31))
    throw resource_error("build_low_tree: template too large to materialize");
  std::vector<int> parents(static_cast<size_t>(n), -1);
  const int root = place_low(d, h, 0, parents);
  return finalize_line_tree(root, std::move(parents));
}

RootedTree trim_to_size(const RootedTree& tree, int n) {
  tree.validate();
  if (n < 1) throw std::domain_error("trim_to_size: target must be positive");
  if (n > tree.size()) throw std::domain_error("trim_to_size: target exceeds tree size");
  if (n == tree.size()) return tree;

  const auto depth = tree.depths();
  std::vector<int> child_count(tree.size());
  for (int v = 0; v < tree.size(); ++v)
    child_count[v] = static_cast<int>(tree.children[v].size());
  std::vector<char> removed(tree.size(), 0);

  // Deepest leaf first, largest coordinate on ties.
  std::priority_queue<std::pair<int, int>> leaves;
  for (int v = 0; v < tree.size(); ++v)
    if (child_count[v] == 0) leaves.push({depth[v], v});

  int to_remove = tree.size() - n;
  while (to_remove > 0) {
    auto [d, v] = leaves.top();
    leaves.pop();
    if (removed[v] || child_count[v] != 0) continue;  // stale entry
    removed[v] = 1;
    --to_remove;
    const int p = tree.parent[v];
    if (p >= 0 && --child_count[p] == 0 && !removed[p]) leaves.push({depth[p], p});
  }

  std::vector<int> new_id(tree.size(), -1);
  int next = 0;
  for (int v = 0; v < tree.size(); ++v)
    if (!removed[v]) new_id[v] = next++;

  std::vector<int> parents(n, -1);
  for (int v = 0; v < tree.size(); ++v) {
    if (removed[v] || v == tree.root) continue;
    parents[new_id[v]] = new_id[tree.parent[v]];
  }
  return finalize_line_tree(new_id[tree.root], std::move(parents));
}

RootedTree compose(const RootedTree& base, int v, const RootedTree& attached, Side side) {
  base.validate();
  attached.validate();
  if (v < 0 || v >= base.size()) throw validation_error("compose: vertex not in base tree");
  const int n1 = base.size(), n2 = attached.size();
  const int cut = side == Side::right ? v + 1 : v;  // first coordinate of the block
  auto map_base = [&](int u) { return u < cut ? u : u + n2; };
  auto map_attached = [&](int w) { return cut + w; };

  std::vector<int> parents(n1 + n2, -1);
  for (int u = 0; u < n1; ++u)
    if (u != base.root) parents[map_base(u)] = map_base(base.parent[u]);
  for (int w = 0; w < n2; ++w)
    if (w != attached.root) parents[map_attached(w)] = map_attached(attached.parent[w]);
  parents[map_attached(attached.root)] = map_base(v);
  return finalize_line_tree(map_base(base.root), std::move(parents));
}

LltResult build_llt(const MetricSpace& m, int h, int root) {
  const int n = m.size();
  if (root < 0 || root >= n) throw validation_error("build_llt: root out of range");
  if (h < 0) throw std::domain_error("build_llt: h must be non-negative");
  if (h == 0 && n > 1) throw std::domain_error("build_llt: h = 0 only spans a single point");

  ConstructionPlan plan;
  plan.n = n;
  plan.h_budget = h;

  RootedTree templ;
  if (h >= n - 1) {
    // Any depth budget from n-1 up is met by the path, which has load 1.
    plan.regime = Regime::high;
    plan.xi = 1;
    plan.h_template = n - 1;
    plan.template_size = static_cast<std::uint64_t>(n);
    plan.load_bound = n > 1 ? 1 : 0;
    plan.clamped = h > n - 1;
    templ = build_high_tree(1, n - 1);
  } else {
    const int lg = ceil_log2(n);
    if (h < lg) {
      plan.regime = Regime::low;
      int d = 2;
      while (size_low(d, h) <= static_cast<std::uint64_t>(n)) ++d;
      plan.d = d;
      plan.h_template = h;
      plan.template_size = size_low(d, h);
      plan.load_bound = d * h;
      templ = trim_to_size(build_low_tree(d, h), n);
    } else if (h < 2 * lg) {
      plan.regime = Regime::mid;
      plan.h_template = floor_log2(n);
      plan.template_size = static_cast<std::uint64_t>(n);
      plan.load_bound = floor_log2(n);
      templ = build_balanced(n);
    } else {
      plan.regime = Regime::high;
      int xi = 1;
      while (size_high(xi, h) <= static_cast<std::uint64_t>(n)) ++xi;
      int ht = xi - 1;
      while (size_high(xi, ht) <= static_cast<std::uint64_t>(n)) ++ht;
      plan.xi = xi;
      plan.h_template = ht;
      plan.template_size = size_high(xi, ht);
      plan.load_bound = xi;
      templ = trim_to_size(build_high_tree(xi, ht), n);
    }
  }

  LltResult result;
  result.plan = plan;
  result.order = hamiltonian_path(m, minimum_spanning_tree(m, root), root);

  // Thread the template onto the Hamiltonian order: coordinate i becomes the
  // i-th vertex of the order; structure and load carry over unchanged.
  const auto& ord = result.order.order;
  RootedTree& out = result.tree;
  out.root = ord[templ.root];
  out.parent.assign(n, -1);
  out.children.assign(n, {});
  out.edge_weight.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (i == templ.root) continue;
    const int v = ord[i];
    const int p = ord[templ.parent[i]];
    out.parent[v] = p;
    out.edge_weight[v] = m.dist(p, v);
  }
  for (int i = 0; i < n; ++i)
    for (int c : templ.children[i]) out.children[ord[i]].push_back(ord[c]);
  return result;
}

}  // namespace llt
