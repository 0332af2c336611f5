#pragma once

#include "dlpbench/clustering/algo_spec.hpp"

namespace dlpbench {

struct BirchResult {
    Partition partition;
    double threshold = 0.0;       // threshold of the tree that was used
    std::size_t subclusters = 0;  // leaf entries of that tree
};

/// Leaf subclusters of a CF-tree built in input order (one entry per point's
/// subcluster index). A point joins its nearest leaf entry when the merged
/// radius stays within `threshold`; nodes holding more than `branching`
/// entries split around their two farthest entries.
std::vector<std::size_t> birch_subclusters(std::span<const std::vector<double>> x, int branching, double threshold);

/// BIRCH: builds the tree, then groups the leaf centroids into k clusters
/// with size-weighted Ward linkage; points inherit their subcluster's label.
/// The threshold is divided by 10 while there are fewer than k entries;
/// ThresholdUnderflow after 10 reductions.
BirchResult birch(std::span<const std::vector<double>> x, int k, int branching = 50, double threshold = 0.1);

}  // namespace dlpbench
