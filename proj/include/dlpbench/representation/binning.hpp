#pragma once

#include <span>
#include <string>
#include <vector>

namespace dlpbench {

/// How SAX and MTF place bin boundaries within one series.
///  * Quantile: empirical quantiles of the series (linear interpolation).
///  * Uniform: equal-width bins between the series' minimum and maximum.
///  * Normal: standard normal breakpoints applied to the standardised series.
enum class BinStrategy { Quantile, Uniform, Normal };

std::string bin_strategy_name(BinStrategy s);
/// ParseError on unknown names.
BinStrategy parse_bin_strategy(const std::string& name);

/// The n_b - 1 interior breakpoints of N(0, 1) at probabilities i / n_b.
std::vector<double> gaussian_breakpoints(int n_b);

/// Interior bin edges (n_b - 1 values, non-decreasing) in the units of x.
/// InvalidParameter unless 2 <= n_b <= 26.
std::vector<double> bin_edges(BinStrategy strategy, int n_b, std::span<const double> x);

/// Bin index of every sample: the number of edges <= x_t, so in [0, n_b).
std::vector<int> digitize(BinStrategy strategy, int n_b, std::span<const double> x);

}  // namespace dlpbench
