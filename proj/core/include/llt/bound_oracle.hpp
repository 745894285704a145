#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "llt/binomial.hpp"
#include "llt/rooted_tree.hpp"

namespace llt {

// ---------------------------------------------------------------------------
// Binary tree shapes and the linear-arrangement cost machinery.
// ---------------------------------------------------------------------------

/// Plain binary tree shape; node 0 is the root, children by index (-1 absent).
struct BinaryShape {
  struct Node {
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;

  int size() const { return static_cast<int>(nodes.size()); }
  int depth() const;
  std::vector<int> subtree_sizes() const;
};

/// Calls fn with every binary tree shape on exactly n nodes (all left/right
/// splits, Catalan(n) of them).
void enumerate_binary_shapes(int n, const std::function<void(const BinaryShape&)>& fn);

struct TreeCost {
  long long cost_prime;  // sum over inner v of min(|v.left|, |v.right|)
  double cost;           // (cost_prime + #inner) / 2; satisfies 2*cost >= cost_prime
};
TreeCost tree_cost(const BinaryShape& shape);

/// Swaps children wherever the right subtree outweighs the left, so that
/// |v.right| <= |v.left| everywhere.  Cost and depth are unchanged.
BinaryShape right_adjust(const BinaryShape& shape);

struct BinaryWordSet {
  struct Word {
    std::uint32_t bits = 0;
    int length = 0;
  };
  std::vector<Word> words;
  long long hamming_cost() const;
};

/// Root-to-vertex path words of a right-adjusted shape (left step 0, right
/// step 1; the root contributes the empty word).  The total Hamming weight
/// equals cost_prime of the shape.
BinaryWordSet vocabulary(const BinaryShape& adjusted);

/// Minimum total Hamming weight of n distinct binary words of length <= h,
/// by the level-counting closed form.
struct HammingCost {
  long long value = 0;       // H(n,h)
  int max_full_weight = -1;  // largest weight class used in full (-1: none)
  long long extra_words = 0; // words taken from the next weight class
};
HammingCost min_hamming_cost(int n, int h);

/// Same minimum by brute force: materialize every word of length <= h and
/// sum the n smallest Hamming weights.  Independent of the closed form.
long long greedy_hamming_cost(int n, int h);

/// Minimum cost_prime over binary trees with n nodes and depth at most h.
long long exhaustive_min_cost(int n, int h, int cap = 12);

/// Least f with C(h+1, f) > (2/3) n, in exact arithmetic.  Defined for
/// h > 2*floor(log2 n).
int f_of_h(int n, int h);

// ---------------------------------------------------------------------------
// Exhaustive scans over line trees.
// ---------------------------------------------------------------------------

enum class TreeStat { weight, covering };

/// Results of scanning every rooted labelled tree on the n-point line
/// (n^(n-1) rooted trees).  Indexed by exact depth h in [0, n-1]; -1 marks
/// depths no tree attains.
struct ThetaScan {
  int n = 0;
  std::vector<long long> min_weight;         // min over trees of depth exactly h
  std::vector<int> min_covering;
  std::vector<long long> min_binary_weight;  // min weight, binary trees of depth <= h
  bool degree_bound_holds = true;  // 2*chi(T) >= max_degree - 2 on every tree
  std::uint64_t rooted_trees = 0;
};
ThetaScan scan_theta_trees(int n, int cap = 8);

/// Exact minimum weight or covering over all line trees on n points of depth
/// exactly h.
long long exhaustive_min(int n, int h, TreeStat stat, int cap = 8);

/// Calls fn with every rooted labelled line tree on n points (children in
/// ascending order, line edge weights).
void for_each_theta_tree(int n, const std::function<void(const RootedTree&)>& fn,
                         int cap = 8);

// ---------------------------------------------------------------------------
// Analytic lower bounds, evaluated exactly and paired with exhaustive values.
// ---------------------------------------------------------------------------

struct BoundReport {
  std::string kind;  // cost-lower-midrange | cost-lower-deep | covering-lower | covering-vs-degree
  int n = 0;
  int h = 0;
  double analytic = 0;    // the evaluated bound
  bool vacuous = false;   // bound is <= 0 at this scale, so it asserts nothing
  std::optional<long long> exhaustive;  // exact minimum when within caps
  std::optional<bool> holds;            // exhaustive respects the bound
};

/// Evaluates every bound applicable at (n, h): the two minimum-cost bounds
/// (for depth at and beyond the log range), the covering growth bound
/// (h <= (1/5) log2 n), and the degree-based covering bound at h = 1.
std::vector<BoundReport> analytic_bounds(int n, int h, int enum_cap = 8,
                                         int cost_cap = 12);

// ---------------------------------------------------------------------------
// The path-plus-expensive-star graph: spanning trees must trade hop diameter
// against weight.
// ---------------------------------------------------------------------------

struct HardGraphReport {
  int n = 0;
  double star_weight = 0;  // W
  double mst_weight = 0;   // (n-2) + W
  std::uint64_t spanning_trees = 0;
  double min_psi_lambda = 0;  // min over spanning trees of lightness * hop diameter
  int min_hops_single_star = 0;  // min hop diameter among trees using one star edge
};

/// Exhaustive spanning-tree scan of the union of a unit-weight path on n-1
/// vertices with a weight-W star from a hub to every path vertex.
HardGraphReport hard_graph(int n, double star_weight, int cap = 12);

}  // namespace llt
