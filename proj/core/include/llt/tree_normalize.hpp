#pragma once

#include "llt/metric_space.hpp"
#include "llt/rooted_tree.hpp"

namespace llt {

/// Rewires every star of the tree into a balanced two-level layout: with the
/// children of v ordered by decreasing subtree size (ties: smaller label),
/// c1 and c2 stay under v and c_{2i+1}, c_{2i+2} move under c_i.  The result
/// spans the same vertices, every vertex has at most four children, the root
/// at most two, depth grows by at most log2 n, and the weight (re-derived
/// from the metric) at most triples.  Never increases any vertex's child
/// count, so binary input stays binary.
RootedTree four_extension(const RootedTree& tree, const MetricSpace& m);

/// Replaces every star of a 4-ary tree by the chain v -> c1 -> c2 -> ...,
/// giving a binary tree whose root has one child.  Depth at most quadruples
/// and weight at most doubles.
RootedTree bin_extension(const RootedTree& tree, const MetricSpace& m);

/// bin_extension after four_extension: binary output with depth in
/// [h, 8h] for trees of depth h >= log2 n, and weight at most 6x.
RootedTree to_binary(const RootedTree& tree, const MetricSpace& m);

/// Depth-monotonicity step for line trees: grows the depth by exactly one
/// without increasing the covering.  A leaf off the (leftmost) deepest path
/// is sacrificed — the largest-labelled one — and a half-integer twin is
/// hung off the deepest vertex, after which coordinates are re-ranked to
/// 1..n.  Requires depth <= n-2 (a path cannot be deepened).
RootedTree deepen(const RootedTree& tree);

}  // namespace llt
