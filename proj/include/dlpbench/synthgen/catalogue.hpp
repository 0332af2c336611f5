#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "dlpbench/synthgen/conflict_map.hpp"
#include "dlpbench/synthgen/shape_spec.hpp"

namespace dlpbench {

/// Random outlier shapes: a DU{min_peaks, max_peaks} number of Gaussian
/// peaks plus an optional solar dip and an optional logistic step.
struct OutlierSpec {
    int min_peaks = 1;
    int max_peaks = 4;
    Range peak_loc{0.0, 24.0};
    Range peak_scale{0.2, 3.0};
    Range peak_magnitude{0.3, 1.0};
    Range base{0.0, 0.2};
    double pv_probability = 0.3;
    PvDip pv;
    double step_probability = 0.3;
    Range step_loc{0.0, 24.0};
    Range step_rate{0.5, 4.0};
    Range step_magnitude{0.2, 0.8};
};

/// Base shape of a two-cluster separation scenario and the component that
/// is displaced.
struct SeparationSpec {
    ShapeSpec shape;
    std::size_t component = 0;
};

struct Catalogue {
    int version = 0;
    std::vector<ShapeSpec> shapes;
    SeparationSpec timing;
    SeparationSpec magnitude;
    SeparationSpec width;
    OutlierSpec outliers;
    ConflictMap conflicts;
};

/// Validates every shape (ids must be 0..n-1 in order) and the conflict map.
Catalogue parse_catalogue(const nlohmann::json& j);
Catalogue load_catalogue(const std::filesystem::path& path);
nlohmann::json catalogue_json(const Catalogue& c);

/// The catalogue compiled into the library.
const Catalogue& default_catalogue();

}  // namespace dlpbench
