#pragma once

#include "dlpbench/core/rng.hpp"
#include "dlpbench/core/types.hpp"
#include "dlpbench/synthgen/catalogue.hpp"

namespace dlpbench {

/// Draws a concrete outlier shape: every range collapsed to the drawn value.
/// Peak and step magnitudes are scaled down together when their sum would
/// exceed 1, and the base is raised to keep a solar dip above 0, so the
/// curve never needs clipping.
ShapeSpec draw_outlier_shape(const OutlierSpec& spec, Rng& rng);

/// One outlier DLP from the catalogue's outlier spec.
TimeSeries gen_outlier(const OutlierSpec& spec, const StarParams& params, Rng& rng);
TimeSeries gen_outlier(Rng& rng, double sigma_l = 0.12, double sigma_h = 0.1);

}  // namespace dlpbench
