#pragma once

#include <cstdint>
#include <string>

#include "llt/metric_space.hpp"
#include "llt/rooted_tree.hpp"

namespace llt {

/// Depth regime picked by build_llt, by comparing the budget h against
/// ceil(log2 n).
enum class Regime { low, mid, high };

/// How a spanning tree was assembled: which template family, with which
/// parameters, and how much was trimmed away.
struct ConstructionPlan {
  Regime regime = Regime::high;
  int n = 1;              // target vertex count
  int h_budget = 0;       // requested depth bound
  int h_template = 0;     // depth of the template actually instantiated
  int xi = 0;             // load parameter (high regime)
  int d = 0;              // arity parameter (low regime)
  std::uint64_t template_size = 1;  // vertices before trimming
  int load_bound = 0;     // guaranteed load of the final tree
  bool clamped = false;   // h exceeded n-1 and was clamped to the path

  std::string regime_name() const;
};

/// Joins two line trees into one: the block of coordinates of `attached`
/// is inserted immediately after (side right) or before (side left) vertex
/// v of `base`, and attached's root becomes a child of v.  Vertex ids are
/// shifted accordingly; weights stay line weights.
enum class Side { left, right };
RootedTree compose(const RootedTree& base, int v, const RootedTree& attached, Side side);

/// Size N(xi,h) of the high-regime template: N(1,h) = h+1 and
///   N(xi,h) = h+1 + sum_{i=1..h} N(min(xi-1, h-i+1), h-i).
/// Saturates at 2^62 to keep comparisons exact.  Requires h >= xi-1, xi >= 1.
std::uint64_t size_high(int xi, int h);

/// Binary line tree on N(xi,h) vertices, rooted at coordinate 1, with depth
/// exactly h and load exactly xi: a spine path of h+1 vertices where the i-th
/// spine vertex carries the template for (min(xi-1, h-i+1), h-i) as a right
/// subtree.
RootedTree build_high_tree(int xi, int h);

/// Balanced binary line tree: root ceil(n/2), halves built recursively.
/// Depth and load are both at most floor(log2 n).
RootedTree build_balanced(int n);

/// Size of the low-regime template: sum_{i=0..h} d^i, saturating.
std::uint64_t size_low(int d, int h);

/// d-ary line tree of depth h: the root carries d copies of the depth-(h-1)
/// tree, ceil(d/2) attached on the left and the rest on the right.  Load is
/// at most d*h.
RootedTree build_low_tree(int d, int h);

/// Removes vertices until exactly n remain, always deleting a deepest leaf
/// (ties: largest coordinate), then relabels coordinates to 1..n by rank.
/// Depth, load, per-edge load and arity never increase.
RootedTree trim_to_size(const RootedTree& tree, int n);

struct LltResult {
  RootedTree tree;    // spanning tree of the metric
  ConstructionPlan plan;
  LinearOrder order;  // the Hamiltonian order the tree was threaded onto
};

/// Spanning tree of m with depth at most h: picks a regime, instantiates the
/// matching line-tree template, trims it to n vertices, and maps coordinate
/// i to the i-th vertex of the shortcut Hamiltonian order starting at `root`.
/// The tree's load against that order is at most plan.load_bound, so its
/// lightness is at most twice that.
LltResult build_llt(const MetricSpace& m, int h, int root = 0);

}  // namespace llt
