#pragma once

#include <span>
#include <string>
#include <vector>

#include "dlpbench/core/types.hpp"

namespace dlpbench {

/// Which coefficients feed the distance: every coefficient, the final
/// approximation only, or the final approximation and detail pair.
enum class DwtMode { All, Approximation, LatestPair };

std::string dwt_mode_name(DwtMode m);
DwtMode parse_dwt_mode(const std::string& name);

/// Series are linearly interpolated to this many points before the transform.
inline constexpr std::size_t kDwtLength = 64;

/// Decomposition low-pass filter of Daubechies-`order` (1..5), 2 * order taps.
const std::vector<double>& daubechies_filter(int order);

/// Deepest useful level for a 64-point signal: floor(log2(64 / (taps - 1))).
int max_dwt_level(int order);

/// Multilevel coefficients: approximation at the last level, then details
/// from the last level back to level 1.
struct WaveletCoefficients {
    std::vector<double> approximation;
    std::vector<std::vector<double>> details;
};

/// Periodised multilevel transform of a signal whose length is divisible by
/// 2^level. Index convention matches PyWavelets' "periodization" mode.
/// LevelTooDeep when level > max_dwt_level(order) or the length does not allow it.
WaveletCoefficients wavedec(std::span<const double> x, int order, int level);
/// Exact inverse of wavedec.
std::vector<double> waverec(const WaveletCoefficients& c, int order);

/// np.interp-style resampling of x onto n equally spaced points.
std::vector<double> interpolate(std::span<const double> x, std::size_t n);

/// Interpolates to 64 points, decomposes and keeps the coefficients for `mode`.
FeatureVector dwt(std::span<const double> x, int order, int level, DwtMode mode);

}  // namespace dlpbench
