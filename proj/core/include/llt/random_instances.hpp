#pragma once

#include <cstdint>
#include <random>

#include "llt/metric_space.hpp"
#include "llt/rooted_tree.hpp"

namespace llt {

using Rng = std::mt19937_64;

/// Uniform points in the unit cube.
MetricSpace random_euclidean(int n, int dim, Rng& rng);

/// Symmetric matrix with entries in [1, 2]: every triple satisfies the
/// triangle inequality outright, so the result is always a metric.
MetricSpace random_matrix_metric(int n, Rng& rng);

/// Uniform labelled tree (random parent sequence decoded through the
/// bijection with labelled trees), rooted at a uniform vertex, line weights.
RootedTree random_theta_tree(int n, Rng& rng);

/// Same shape distribution, but weighted against a metric.
RootedTree random_spanning_tree(const MetricSpace& m, Rng& rng);

}  // namespace llt
