#pragma once

#include <span>
#include <vector>

#include "dlpbench/stats/ranks.hpp"

namespace dlpbench {

struct TestResult {
    double statistic = 0.0;
    double p = 1.0;
};

/// Friedman chi-square over per-dataset ranks with the tie correction
/// 1 - sum(t^3 - t) / (n k (k^2 - 1)); p from the chi-square tail with k - 1
/// degrees of freedom. Needs >= 2 methods and >= 2 datasets. When every
/// dataset ties all methods the statistic is 0 and p = 1.
TestResult friedman(const ScoreTable& scores);

enum class WilcoxonMethod { Auto, Exact, Normal };

/// Two-sided Wilcoxon signed-rank test on paired samples. Zero differences
/// are dropped first; if none remain the samples are identical and p = 1.
/// Fewer than 5 non-zero pairs throws TooFewPairs. Auto uses the exact null
/// null distribution (over all 2^n sign patterns of the tied ranks) for
/// n <= 15 and otherwise the normal approximation with tie and continuity
/// corrections.
TestResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                WilcoxonMethod method = WilcoxonMethod::Auto);

/// p * m clipped to 1.
std::vector<double> bonferroni(std::span<const double> pvals, double m);

/// adjacency[i][j] is true when methods i and j are NOT significantly
/// different: Bonferroni-corrected (m = k(k-1)/2) pairwise Wilcoxon p >= alpha.
/// Pairs with too few non-zero differences count as not different.
std::vector<std::vector<bool>> nonsignificance_graph(const ScoreTable& scores, double alpha = 0.05);

}  // namespace dlpbench
