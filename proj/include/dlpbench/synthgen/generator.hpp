#pragma once

#include <span>
#include <vector>

#include "dlpbench/core/rng.hpp"
#include "dlpbench/core/types.hpp"
#include "dlpbench/synthgen/shape_spec.hpp"

namespace dlpbench {

/// Stage one: draws every component parameter from its range, sums the
/// components over 480 points (t = 0, 0.05, ..., 23.95 h) and clips to [0, 1].
/// Throws SpecOutOfBounds when more than 5% of the curve's absolute mass is
/// removed by clipping.
std::vector<double> gen_characteristic_curve(const ShapeSpec& spec, Rng& rng);

/// Stage two: Y_t = theta1 Y_{t-1} + (1 + theta2 Y_{t-1}) C_t + W_t for
/// t >= 1, with W_t ~ N(0, sigma_l) when C_t < 0.5 and N(0, sigma_h)
/// otherwise. Y_0 ~ N(0, sigma_l) in Low mode and N(1.5, sigma_h) in High mode.
std::vector<double> simulate_star(std::span<const double> curve, const StarParams& params, Y0Mode mode, Rng& rng);

/// Stage three: keeps indices offset, offset + 10, ..., offset + 470 and
/// min-max normalises them.
TimeSeries downsample_and_normalize(std::span<const double> y, std::size_t offset);
/// Same with offset ~ DU{0, 9} drawn from rng.
TimeSeries downsample_and_normalize(std::span<const double> y, Rng& rng);

/// All three stages for one shape.
TimeSeries gen_dlp(const ShapeSpec& spec, const StarParams& params, Rng& rng);
/// One DLP from cluster `cluster_id` (0..19) of the built-in catalogue.
TimeSeries gen_dlp(int cluster_id, double sigma_l, double sigma_h, Rng& rng);

}  // namespace dlpbench
