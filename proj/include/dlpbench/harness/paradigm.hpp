#pragma once

#include <span>
#include <vector>

#include "dlpbench/core/types.hpp"
#include "dlpbench/harness/method_id.hpp"

namespace dlpbench {

/// Everything the clustering algorithms need from one paradigm.
struct ParadigmData {
    DissimilarityMatrix matrix;
    /// Points in the space the distances live in: the raw series for ED and
    /// the feature vectors for vector representations. Empty otherwise, in
    /// which case vector algorithms fall back to the matrix rows.
    std::vector<std::vector<double>> vectors;
};

ParadigmData evaluate_paradigm(const Paradigm& p, std::span<const TimeSeries> series, unsigned threads = 1);

/// The pairwise matrix alone.
DissimilarityMatrix paradigm_matrix(const Paradigm& p, std::span<const TimeSeries> series, unsigned threads = 1);

}  // namespace dlpbench
