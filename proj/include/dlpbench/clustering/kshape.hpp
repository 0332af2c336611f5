#pragma once

#include "dlpbench/clustering/algo_spec.hpp"

namespace dlpbench {

struct KShapeResult {
    Partition partition;
    std::vector<std::vector<double>> centroids;  // z-normalised
    double cost = 0.0;                           // sum of SBD to the assigned centroid
    std::vector<double> trace;                   // cost after every iteration of the chosen restart
};

/// Shape extraction: the dominant eigenvector of Q^T S Q, where S sums the
/// outer products of the members aligned to `reference` by SBD and Q centres
/// the series. The sign is chosen so the result is closer to the members,
/// and the centroid is z-normalised. A zero reference skips the alignment.
std::vector<double> shape_extraction(std::span<const std::vector<double>> members, std::span<const double> reference);

/// k-shape on the series as given (no input z-normalisation): k distinct
/// random series seed the centroids, then centroid extraction and SBD
/// assignment alternate until labels stop changing, the cost improves by
/// less than tol, an iteration would raise the cost (that step is undone),
/// or max_iter. Empty clusters take a random member of a larger cluster.
/// Best of n_init restarts by total SBD.
KShapeResult kshape(std::span<const TimeSeries> series, int k, const Rng& rng, int n_init = 30, int max_iter = 200,
                    double tol = 1e-5, unsigned threads = 0);

}  // namespace dlpbench
