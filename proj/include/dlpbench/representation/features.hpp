#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dlpbench {

/// Bumped whenever a feature is added, removed or redefined.
inline constexpr int kFeatureCatalogueVersion = 1;

/// Catalogue names in output order. Groups: temporal (mean, variance,
/// strikes, extreme times, autocorrelations, changes, peaks, crossings),
/// statistical (quantiles, moments, deviations, entropy of a histogram),
/// spectral (entropy, dominant frequency, centroid, spread, roll-off,
/// flatness, band powers) and complexity (CE, rescaled-range Hurst
/// exponent, KPSS level statistic, permutation entropy, Lempel-Ziv).
const std::vector<std::string>& feature_names();

/// Position of `name` in feature_names(); InvalidParameter if unknown.
std::size_t feature_index(std::string_view name);

/// Every catalogue feature of x. InvalidParameter when |x| < 8.
std::vector<double> extract_features(std::span<const double> x);

/// Rescaled-range Hurst exponent: slope of log(mean R/S) against log(s) over
/// window sizes s in {6, 8, 12, 16, 24, 48} that fit in x. 0.5 when fewer than
/// two sizes give a finite R/S.
double hurst_rs(std::span<const double> x);

/// KPSS level-stationarity statistic with Bartlett-weighted long-run
/// variance and lag floor(4 (n / 100)^0.25). 0 for a constant series.
double kpss_level(std::span<const double> x);

/// Shannon entropy of the normalised power spectrum (DC excluded), divided
/// by log(number of bins) so it lies in [0, 1].
double spectral_entropy(std::span<const double> x);

}  // namespace dlpbench
