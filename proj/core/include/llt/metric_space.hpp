#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "llt/rooted_tree.hpp"

namespace llt {

enum class MetricKind { line, euclidean, matrix };

/// Finite metric space on vertices 0..n-1, viewed as the complete weighted
/// graph that spanning trees are drawn from.
///
/// Three flavors: `line` (vertex i at integer coordinate i+1, exact integer
/// distances), `euclidean` (explicit coordinates in R^d), and `matrix`
/// (explicit distance matrix, validated on construction).
class MetricSpace {
 public:
  static MetricSpace line(int n);
  static MetricSpace euclidean(int dim, std::vector<double> coords);
  static MetricSpace matrix(int n, std::vector<double> entries);

  /// Parses one of the text formats:
  ///   line N
  ///   points D   (then one vertex per line, D reals each)
  ///   matrix N   (then N rows of N reals)
  static MetricSpace parse(std::istream& in);
  static MetricSpace parse_file(const std::string& path);

  int size() const { return n_; }
  MetricKind kind() const { return kind_; }
  int dim() const { return dim_; }

  double dist(int i, int j) const;
  double coord(int i, int d) const { return data_[static_cast<size_t>(i) * dim_ + d]; }

 private:
  MetricSpace(MetricKind kind, int n, int dim, std::vector<double> data)
      : kind_(kind), n_(n), dim_(dim), data_(std::move(data)) {}

  MetricKind kind_;
  int n_;
  int dim_;                   // euclidean only
  std::vector<double> data_;  // coords (n*dim) or matrix (n*n)
};

MetricSpace line_metric(int n);
MetricSpace load_metric(std::istream& in);
MetricSpace load_metric_file(const std::string& path);

/// Hamiltonian vertex ordering with its n-1 consecutive distances.
struct LinearOrder {
  std::vector<int> order;            // permutation of 0..n-1
  std::vector<double> edge_weights;  // dist(order[q], order[q+1])

  int size() const { return static_cast<int>(order.size()); }
  double total_weight() const;
  /// Inverse permutation: position of each vertex in the order.
  std::vector<int> positions() const;
};

/// Exact minimum spanning tree of the complete graph on M, rooted at `root`.
/// Edges are chosen greedily by (weight, i, j), so equal-weight ties resolve
/// to the lexicographically smallest pair and the result is reproducible.
RootedTree minimum_spanning_tree(const MetricSpace& m, int root = 0);

/// Shortcut Hamiltonian path: first occurrences of an Euler tour of `mst`
/// re-rooted at `start`, neighbors visited in ascending index.  Total weight
/// is at most twice the MST weight.
LinearOrder hamiltonian_path(const MetricSpace& m, const RootedTree& mst, int start);

}  // namespace llt
