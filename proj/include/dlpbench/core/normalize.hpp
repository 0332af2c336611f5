#pragma once

#include <span>
#include <vector>

#include "dlpbench/core/types.hpp"

namespace dlpbench {

/// X_t = (Y_t - min) / (max - min). The arg-min maps to exactly 0 and the
/// arg-max to exactly 1. Throws ConstantSeries when max == min and
/// InvariantViolation on fewer than two samples or non-finite input.
TimeSeries minmax_normalize(std::span<const double> y);

/// Same transform without the TimeSeries wrapper.
std::vector<double> minmax_values(std::span<const double> y);

/// (x - mean) / sd with the population sd; throws ZeroVariance on constants.
std::vector<double> z_normalize(std::span<const double> x);

}  // namespace dlpbench
