#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dlpbench/core/types.hpp"

namespace dlpbench {

/// Means over consecutive windows of w samples; a trailing partial window is
/// averaged over its actual length, giving ceil(n / w) values.
/// InvalidParameter unless 1 <= w <= 24.
FeatureVector paa(std::span<const double> x, int w);

/// [begin, end) bounds splitting n samples into `segments` near-equal runs:
/// segment i covers floor(i n / segments) .. floor((i + 1) n / segments).
/// InvalidParameter unless 1 <= segments <= n.
std::vector<std::pair<std::size_t, std::size_t>> segment_bounds(std::size_t n, std::size_t segments);

}  // namespace dlpbench
