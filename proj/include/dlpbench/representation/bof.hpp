#pragma once

#include <span>
#include <string>
#include <vector>

#include "dlpbench/core/types.hpp"
#include "dlpbench/representation/pca.hpp"

namespace dlpbench {

enum class FeatureNormalization { None, MinMax };

std::string feature_normalization_name(FeatureNormalization n);
FeatureNormalization parse_feature_normalization(const std::string& name);

/// Bag-of-features model fitted on one dataset.
struct BofModel {
    FeatureNormalization normalization = FeatureNormalization::None;
    /// Catalogue indices of the non-constant features that were kept.
    std::vector<std::size_t> kept;
    /// Names of the constant features that were dropped.
    std::vector<std::string> dropped;
    /// Column minima and maxima over the dataset (used by MinMax).
    std::vector<double> lo, hi;
    /// PCA over every kept (and optionally normalised) feature.
    PcaModel pca;
};

/// Extracts the catalogue for every series, drops constant columns,
/// optionally min-max scales each column over the dataset and fits PCA.
BofModel bof_fit(std::span<const TimeSeries> series, FeatureNormalization normalization);

/// First n_c principal components of x's features (0 = every available
/// component). InvalidParameter when n_c exceeds the catalogue size; fewer
/// components are returned when the fitted model has fewer.
FeatureVector bof_apply(const BofModel& model, std::span<const double> x, std::size_t n_c);

}  // namespace dlpbench
