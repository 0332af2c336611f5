#pragma once

#include "dlpbench/clustering/algo_spec.hpp"

namespace dlpbench {

struct KMeansResult {
    Partition partition;
    std::vector<std::vector<double>> centers;
    double inertia = 0.0;  // within-cluster sum of squared distances
    /// Inertia after every assignment step of the chosen restart.
    std::vector<double> trace;
    int iterations = 0;
};

/// Lloyd's algorithm from k-means++ seeds. Stops when the summed squared
/// centre shift is at most tol or after max_iter iterations. An empty cluster
/// takes the point farthest from its centre. Best of n_init restarts.
KMeansResult kmeans(std::span<const std::vector<double>> x, int k, const Rng& rng, int n_init = 30,
                    int max_iter = 200, double tol = 1e-5, unsigned threads = 0);

}  // namespace dlpbench
