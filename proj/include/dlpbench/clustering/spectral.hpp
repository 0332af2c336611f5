#pragma once

#include "dlpbench/clustering/algo_spec.hpp"

namespace dlpbench {

struct SpectralResult {
    Partition partition;
    double delta = 0.0;  // kernel width that succeeded
};

/// Number of kernel widths tried (delta0, delta0 + 20, ...) before EigenFailure.
inline constexpr int kSpectralAttempts = 10;

/// Normalised spectral clustering. Dissimilarities are rescaled so their
/// median is 100, A_ij = exp(-d_ij^2 / (2 delta^2)) with a zero diagonal,
/// the k leading eigenvectors of D^-1/2 A D^-1/2 are row-normalised and
/// clustered with k-means (10 restarts). An attempt fails when some object
/// has zero affinity to every other object, or the embedding has a zero row;
/// delta then grows by 20.
SpectralResult spectral(const DissimilarityMatrix& d, int k, const Rng& rng, double delta0 = 20.0,
                        unsigned threads = 0);

}  // namespace dlpbench
