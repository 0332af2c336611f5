#pragma once

#include <span>

#include "dlpbench/stats/tests.hpp"

namespace dlpbench {

enum class CorrelationKind { Pearson, Spearman };

/// Correlation coefficient with a two-sided p-value from the t distribution
/// with n - 2 degrees of freedom (t = r sqrt((n - 2) / (1 - r^2))).
/// Needs n >= 3; ZeroVariance on a constant input.
TestResult correlation(std::span<const double> x, std::span<const double> y, CorrelationKind kind);

}  // namespace dlpbench
