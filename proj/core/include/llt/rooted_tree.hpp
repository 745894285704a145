#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace llt {

/// Ordered rooted tree over vertices 0..n-1.
///
/// Vertex ids double as labels: for a tree spanning a metric space they are
/// the metric vertex indices, and for a line-metric tree vertex v sits at
/// coordinate v+1.  Children lists are ordered left-to-right; traversals that
/// depend on child order use the stored order.
struct RootedTree {
  int root = 0;
  std::vector<int> parent;                 // parent[v], -1 at the root
  std::vector<std::vector<int>> children;  // ordered child lists
  std::vector<double> edge_weight;         // weight of (parent[v], v), 0 at the root

  int size() const { return static_cast<int>(parent.size()); }

  static RootedTree singleton();
  /// Builds the tree from a parent vector (weights all zero).
  static RootedTree from_parents(int root, const std::vector<int>& parents);

  /// Structural sanity: single root, consistent parent/children, connected, acyclic.
  void validate() const;

  /// Hop distance from the root, per vertex.
  std::vector<int> depths() const;
  int depth() const;
  /// Max hop distance between any two vertices (two farthest-vertex sweeps).
  int hop_diameter() const;

  int max_arity() const;   // max children count
  int max_degree() const;  // children count plus one for the parent edge
  bool is_binary() const { return max_arity() <= 2; }

  double weight() const;  // sum of stored edge weights

  std::vector<int> subtree_sizes() const;

  /// Vertices in traversal order: each vertex before its subtree, children in
  /// stored order (the first-occurrence sequence of an Euler tour).
  std::vector<int> preorder() const;

  /// Reassigns edge weights to |u - v| (line-metric coordinates).
  void set_line_weights();

  /// Per-vertex weighted distance from the root.
  std::vector<double> root_distances() const;

  bool operator==(const RootedTree&) const = default;
};

/// Text format: one `root R` line, then `parent child weight` per edge,
/// children in ascending child id.  Ids are 1-based in the file.
void write_tree(std::ostream& out, const RootedTree& tree);
std::string tree_to_string(const RootedTree& tree);
RootedTree read_tree(std::istream& in);
RootedTree read_tree_file(const std::string& path);

}  // namespace llt
