#pragma once

#include <optional>
#include <string>
#include <vector>

#include "llt/metric_space.hpp"
#include "llt/rooted_tree.hpp"

namespace llt {

/// Every measured quantity of a spanning tree in one bundle.
struct TreeMetrics {
  int depth = 0;
  int hop_diameter = 0;
  double weight = 0;
  double mst_weight = 0;
  double lightness = 1;             // weight / mst_weight (1 for a single vertex)
  std::optional<int> load;          // max load on an order edge, when an order is given
  std::optional<int> max_covering;  // line metrics only
  int max_arity = 0;
  int max_degree = 0;
};

struct MeasureOptions {
  const LinearOrder* order = nullptr;     // enables the load field
  std::optional<double> mst_weight;       // reuse a precomputed MST weight
};

/// Measures T as a spanning tree of m.  Edge weights are taken from the
/// metric, not from the stored weights.
TreeMetrics measure(const RootedTree& tree, const MetricSpace& m,
                    const MeasureOptions& options = {});

/// Load of a tree against a Hamiltonian order: for each consecutive order
/// edge, the number of tree edges whose endpoints lie on opposite sides.
struct LoadProfile {
  std::vector<int> per_edge;  // indexed by order edge q = 0..n-2
  int max = 0;                // 0 for a single vertex (no order edges exist)
};
LoadProfile load(const RootedTree& tree, const LinearOrder& order);

/// Covering of a line-metric tree: chi(v) counts tree edges (i,j) with
/// i < v < j; max and sum over vertices are both reported.
struct CoveringProfile {
  std::vector<int> per_vertex;
  int max = 0;
  long long sum = 0;
};
CoveringProfile covering(const RootedTree& tree);

/// Max covering of the depth-1 tree rooted at `center` (0-based) on the line
/// with n points: max(center-1, n-center-2) in 0-based terms.
int star_covering(int n, int center);
/// Minimum covering over all depth-1 line trees: ceil((n-3)/2) for n >= 3.
int min_star_covering(int n);

/// JSON object with the exact field names of TreeMetrics (12 significant
/// digits on reals).  Optional fields are emitted as null when absent.
std::string metrics_to_json(const TreeMetrics& metrics);

}  // namespace llt
