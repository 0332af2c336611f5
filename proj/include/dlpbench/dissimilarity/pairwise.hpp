#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dlpbench/core/types.hpp"
#include "dlpbench/dissimilarity/lockstep.hpp"
#include "dlpbench/dissimilarity/measure_spec.hpp"

namespace dlpbench {

/// Dataset-level state some measures need (MAH's covariance).
struct MeasureContext {
    std::optional<MahalanobisContext> mahalanobis;

    static MeasureContext for_measure(const MeasureSpec& spec, std::span<const TimeSeries> series);
};

/// Evaluates one measure on one pair. MAH without a context throws MissingContext.
double distance(const MeasureSpec& spec, Series x, Series y, const MeasureContext* ctx = nullptr);

/// Fills the upper triangle with fn(i, j), parallel over rows. Per-pair
/// exceptions are rethrown as PairFailure naming the pair.
DissimilarityMatrix build_matrix(std::size_t n, const std::function<double(std::size_t, std::size_t)>& fn,
                                 unsigned threads = 0);

DissimilarityMatrix pairwise_matrix(const MeasureSpec& spec, std::span<const TimeSeries> series,
                                    unsigned threads = 0);
DissimilarityMatrix pairwise_matrix(const MeasureSpec& spec, const LabeledDataset& data, unsigned threads = 0);

/// Euclidean distances between feature vectors (representation + ED paradigms).
DissimilarityMatrix euclidean_matrix(std::span<const FeatureVector> features, unsigned threads = 0);

}  // namespace dlpbench
