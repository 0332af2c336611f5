#pragma once

#include "dlpbench/dissimilarity/lockstep.hpp"

namespace dlpbench {

// Banded dynamic programs over equal-length series. `w` is the Sakoe-Chiba
// half-width: cell (i, j) is admissible when |i - j| <= w.

/// D(i,j) = (x_i - y_j)^2 + min(D(i-1,j), D(i,j-1), D(i-1,j-1)); returns D(n,n)
/// without a square root.
double dtw(Series x, Series y, int w);

/// Edit distance with real penalty. Gaps cost |v - g|; borders are cumulative
/// gap costs.
double erp(Series x, Series y, int w, double g);

/// Edit distance on real sequences: substitution costs 0 when |x_i - y_j| <= eps
/// and 1 otherwise, insertions and deletions cost 1. The edit count is divided
/// by n so the result lies in [0, 1].
double ers(Series x, Series y, int w, double eps);

/// 1 - L / n, where L is the longest common subsequence with matches
/// |x_i - y_j| <= eps inside the band.
double lcss(Series x, Series y, int w, double eps);

/// Move-split-merge. A split or merge costs c when the new value lies between
/// its neighbours and c plus the smaller adjacent gap otherwise.
double msm(Series x, Series y, int w, double c);

/// Time-warp edit distance with unit time stamps and a leading zero sample:
/// match cost |x_i - y_j| + |x_{i-1} - y_{j-1}| + 2 nu |i - j|, deletion cost
/// |v_i - v_{i-1}| + nu + lambda.
double twed(Series x, Series y, double nu, double lambda);

/// max(sd(x), sd(y)) / 4 with population standard deviations.
double ers_auto_epsilon(Series x, Series y);

}  // namespace dlpbench
