#pragma once

#include <span>
#include <vector>

#include "dlpbench/core/types.hpp"

namespace dlpbench {

struct PcaModel {
    std::vector<double> mean;
    /// Unit-norm principal axes, one row per component, ordered by
    /// non-increasing explained variance. Each axis is signed so that its
    /// largest-magnitude entry is positive.
    std::vector<std::vector<double>> components;
    std::vector<double> explained_variance;
    /// Set when the covariance rank is below the requested component count;
    /// components then holds only the rank-many non-degenerate axes.
    bool degenerate = false;
    std::size_t requested = 0;
};

/// Eigen-decomposition of the sample covariance (divisor N - 1) of `rows`.
/// InvalidParameter unless 1 <= n_c <= dimension and rows.size() >= n_c.
PcaModel pca_fit(std::span<const std::vector<double>> rows, std::size_t n_c);
PcaModel pca_fit(std::span<const TimeSeries> series, std::size_t n_c);

/// Projection of (x - mean) onto the model's axes.
FeatureVector pca_apply(const PcaModel& model, std::span<const double> x);

}  // namespace dlpbench
