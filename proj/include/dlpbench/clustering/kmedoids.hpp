#pragma once

#include "dlpbench/clustering/algo_spec.hpp"

namespace dlpbench {

struct KMedoidsResult {
    Partition partition;
    std::vector<std::size_t> medoids;  // sorted ascending
    double cost = 0.0;                 // sum of distances to the nearest medoid
    /// Cost after seeding and after every accepted swap of the chosen restart.
    std::vector<double> trace;
};

/// PAM: k-medoids++ seeding followed by steepest-descent SWAP (best swap over
/// every medoid and non-medoid per iteration). Best of n_init restarts;
/// ties keep the lowest restart index.
KMedoidsResult kmedoids(const DissimilarityMatrix& d, int k, const Rng& rng, int n_init = 30, int max_iter = 200,
                        unsigned threads = 0);

/// Total distance of every object to its nearest medoid.
double medoid_cost(const DissimilarityMatrix& d, std::span<const std::size_t> medoids);

}  // namespace dlpbench
