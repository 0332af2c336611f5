#pragma once

#include <span>
#include <vector>

#include "dlpbench/core/types.hpp"

namespace dlpbench {

using Series = std::span<const double>;

double euclidean(Series x, Series y);
double manhattan(Series x, Series y);
double chebyshev(Series x, Series y);
/// (sum |x_t - y_t|^p)^(1/p); p = 1 and p = 2 dispatch to manhattan and euclidean.
double minkowski(Series x, Series y, double p);
/// sum |x - y| / sum |x + y|.
double bray_curtis(Series x, Series y);
/// sum |x - y| / (|x| + |y|), skipping 0/0 terms.
double canberra(Series x, Series y);
/// 1 - cos(x, y); ZeroNorm on an all-zero input.
double cosine_distance(Series x, Series y);
/// 1 - Pearson r; ZeroVariance on a constant input.
double pearson_distance(Series x, Series y);
/// 1 - Spearman rho (average ranks on ties).
double spearman_distance(Series x, Series y);
/// 1 - Kendall tau-b, computed in O(n log n) by counting merge-sort swaps.
double kendall_distance(Series x, Series y);
/// ED scaled by max(CE_x, CE_y) / min(CE_x, CE_y), CE = sqrt(sum (x_{t+1} - x_t)^2).
double cid(Series x, Series y);
/// Hausdorff distance between the sample values viewed as sets of scalars.
double hausdorff(Series x, Series y);

/// Fractional ranks with ties averaged (1-based).
std::vector<double> average_ranks(Series x);
double pearson_r(Series x, Series y);
double kendall_tau_b(Series x, Series y);

/// Inverse of the regularised sample covariance of a dataset, used by MAH.
class MahalanobisContext {
public:
    /// Covariance uses the N - 1 denominator; 1e-6 * trace / dim is added to
    /// the diagonal before inversion.
    static MahalanobisContext fit(std::span<const TimeSeries> series);

    double distance(Series x, Series y) const;
    std::size_t dim() const noexcept { return dim_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> inverse_;  // row-major dim x dim
};

}  // namespace dlpbench
