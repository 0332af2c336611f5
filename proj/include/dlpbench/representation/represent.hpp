#pragma once

#include <span>
#include <vector>

#include "dlpbench/core/types.hpp"
#include "dlpbench/representation/rep_spec.hpp"

namespace dlpbench {

/// Feature vectors for every series. PCA and BOF are fitted on `series`
/// itself. InvalidParameter for SAX, which has no vector form.
std::vector<FeatureVector> represent(const RepSpec& spec, std::span<const TimeSeries> series,
                                     unsigned threads = 0);

/// Pairwise dissimilarities: ED between feature vectors, or the configured
/// string distance for SAX.
DissimilarityMatrix representation_matrix(const RepSpec& spec, std::span<const TimeSeries> series,
                                          unsigned threads = 0);

}  // namespace dlpbench
