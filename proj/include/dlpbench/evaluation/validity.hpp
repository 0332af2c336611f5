#pragma once

#include <span>
#include <utility>
#include <vector>

namespace dlpbench {

/// Contingency table of two labelings (any integer labels).
struct Contingency {
    std::vector<std::vector<double>> counts;  // rows: labels of `a`, columns: labels of `b`
    std::vector<double> row_sums;
    std::vector<double> col_sums;
    double total = 0.0;

    static Contingency build(std::span<const int> a, std::span<const int> b);
};

// External validity indices. All take (predicted, ground truth), throw
// LengthMismatch on unequal lengths and EmptyInput on empty inputs, and return
// 1 for partitions that agree up to relabelling.

/// Adjusted Rand index via pair counting.
double ari(std::span<const int> p, std::span<const int> g);
/// Adjusted mutual information, hypergeometric expected MI, arithmetic-mean
/// normalisation. Not clipped: worse-than-chance agreement gives small
/// negative values.
double ami(std::span<const int> p, std::span<const int> g);
/// 1 - (2N - sum_i max_j n_ij - sum_j max_i n_ij) / (2N).
double one_minus_nvd(std::span<const int> p, std::span<const int> g);
/// Pair-sets index: clusters are matched one-to-one by the Hungarian method
/// on S_ij = n_ij / max(|P_i|, |G_j|); S = sum of matched S_ij. The chance
/// level E = sum_{i < min(K, K')} (n_i m_i / N) / max(n_i, m_i) uses both size
/// lists sorted in decreasing order, and PSI = (S - E) / (max(K, K') - E),
/// clipped at 0. Two single-cluster partitions score 1.
double psi(std::span<const int> p, std::span<const int> g);

/// Drops positions whose ground-truth label is -1 from both vectors.
std::pair<std::vector<int>, std::vector<int>> filter_outliers(std::span<const int> truth,
                                                              std::span<const int> assigned);

/// Maximum-weight assignment on a rectangular weight matrix. Returns, for each
/// row, the matched column or -1 when rows outnumber columns.
std::vector<int> hungarian_max(const std::vector<std::vector<double>>& weights);

}  // namespace dlpbench
