#pragma once

#include <map>
#include <span>
#include <vector>

#include "dlpbench/core/types.hpp"

namespace dlpbench {

struct NnResult {
    double overall = 0.0;
    /// Accuracy among series whose true label is the key.
    std::map<int, double> per_cluster;
    /// Label of each series' nearest neighbour.
    std::vector<int> predictions;
};

/// Leave-one-out 1NN classification. The neighbour of i is argmin_{j != i} d(i, j)
/// with ties going to the smallest j. Labels must be non-negative (filter
/// outliers first); InvariantViolation otherwise.
NnResult loo_1nn(const DissimilarityMatrix& d, std::span<const int> labels);

/// counts[t][p]: number of series with true label t predicted as p.
std::vector<std::vector<double>> confusion_matrix(std::span<const int> truth, std::span<const int> predicted,
                                                  int num_labels);

}  // namespace dlpbench
