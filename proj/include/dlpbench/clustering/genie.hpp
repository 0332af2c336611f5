#pragma once

#include "dlpbench/clustering/algo_spec.hpp"

namespace dlpbench {

struct Edge {
    std::size_t u = 0;  // u < v
    std::size_t v = 0;
    double weight = 0.0;
};

/// Minimum spanning tree by Prim's algorithm, edges sorted by (weight, u, v).
std::vector<Edge> minimum_spanning_tree(const DissimilarityMatrix& d);

/// Normalised Gini index of cluster sizes: sum_{i<j} |c_i - c_j| / ((K - 1) sum c).
/// 0 for a single cluster.
double gini_index(std::span<const std::size_t> sizes);

/// Genie: merges along MST edges in ascending order; while the Gini index of
/// the cluster sizes exceeds g_threshold, only edges touching a cluster of
/// the smallest size are eligible. Stops at k clusters.
Partition genie(const DissimilarityMatrix& d, int k, double g_threshold = 0.3);

}  // namespace dlpbench
