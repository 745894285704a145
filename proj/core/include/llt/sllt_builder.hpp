#pragma once

#include <vector>

#include "llt/metric_space.hpp"
#include "llt/rooted_tree.hpp"

namespace llt {

/// Vertices where the tree walk has drifted too far from the root in metric
/// terms, each of which gets a direct root edge.
struct BreakpointSet {
  double theta = 0;
  int root = 0;
  std::vector<int> points;  // in traversal order; points[0] is the first vertex of the walk
  struct StarEdge {
    int target;
    double weight;  // dist_M(root, target)
  };
  std::vector<StarEdge> star_edges;  // one per breakpoint other than the root
  double chain_distance_sum = 0;     // sum of tree distances between consecutive breakpoints
};

/// Scans the first-occurrence traversal of `tree` (rooted at rt, children in
/// stored order) once and emits a breakpoint whenever the tree distance from
/// the previous breakpoint strictly exceeds theta times the metric distance
/// from the root.  The first vertex of the walk is always a breakpoint.
BreakpointSet breakpoints(const RootedTree& tree, const MetricSpace& m, int rt,
                          double theta);

/// Shortest-path tree, from rt, of the tree augmented with the breakpoint
/// star edges.  Ties resolve to fewer hops, then to the smaller parent.
/// For input depth h >= 1: depth at most 2h-1, weight at most
/// (1 + 2/theta) times the input weight, and every root distance at most
/// (1 + 2*theta) times the metric distance.
RootedTree build_sllt(const RootedTree& tree, const MetricSpace& m, int rt,
                      double theta);

}  // namespace llt
