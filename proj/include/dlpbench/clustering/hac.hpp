#pragma once

#include <vector>

#include "dlpbench/clustering/algo_spec.hpp"

namespace dlpbench {

/// One agglomeration step: clusters `a` < `b` (ids of their smallest
/// members) merge at `height`; the merged cluster keeps id `a`.
struct Merge {
    std::size_t a = 0;
    std::size_t b = 0;
    double height = 0.0;
    std::size_t size = 0;
};

/// The n - 1 merges of agglomerative clustering with Lance-Williams updates.
/// Ward works on squared dissimilarities and reports sqrt heights. Equal
/// merge costs go to the lexicographically smallest (a, b) pair.
std::vector<Merge> hac_merges(const DissimilarityMatrix& d, Linkage linkage);

/// The partition left after n - k merges.
Partition hac(const DissimilarityMatrix& d, Linkage linkage, int k);

/// Same as hac on a full row-major n x n matrix whose starting clusters have
/// the given sizes (default 1). For Ward the entries must already be Ward
/// distances sqrt(2 w_i w_j / (w_i + w_j)) |c_i - c_j|. Used by BIRCH.
Partition hac_full(std::vector<double> full, std::size_t n, Linkage linkage, int k,
                   std::span<const double> weights = {});

}  // namespace dlpbench
