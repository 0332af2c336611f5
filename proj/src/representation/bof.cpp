#include "dlpbench/representation/bof.hpp"

#include <algorithm>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/representation/features.hpp"

namespace dlpbench {

namespace {

std::vector<double> transform(const BofModel& model, const std::vector<double>& features) {
    std::vector<double> row;
    row.reserve(model.kept.size());
    for (std::size_t c = 0; c < model.kept.size(); ++c) {
        double v = features[model.kept[c]];
        if (model.normalization == FeatureNormalization::MinMax) v = (v - model.lo[c]) / (model.hi[c] - model.lo[c]);
        row.push_back(v);
    }
    return row;
}

}  // namespace

std::string feature_normalization_name(FeatureNormalization n) {
    return n == FeatureNormalization::None ? "none" : "minmax";
}

FeatureNormalization parse_feature_normalization(const std::string& name) {
    if (name == "none") return FeatureNormalization::None;
    if (name == "minmax") return FeatureNormalization::MinMax;
    throw ParseError("unknown feature normalisation '" + name + "'");
}

BofModel bof_fit(std::span<const TimeSeries> series, FeatureNormalization normalization) {
    if (series.empty()) throw EmptyInput("bof_fit on an empty dataset");
    std::vector<std::vector<double>> raw;
    raw.reserve(series.size());
    for (const auto& s : series) raw.push_back(extract_features(s.values()));

    BofModel model;
    model.normalization = normalization;
    const auto& names = feature_names();
    for (std::size_t c = 0; c < names.size(); ++c) {
        double lo = raw[0][c], hi = raw[0][c];
        for (const auto& r : raw) {
            lo = std::min(lo, r[c]);
            hi = std::max(hi, r[c]);
        }
        if (hi > lo) {
            model.kept.push_back(c);
            model.lo.push_back(lo);
            model.hi.push_back(hi);
        } else {
            model.dropped.push_back(names[c]);
        }
    }
    if (model.kept.empty()) throw InvalidParameter("bof: every feature is constant over the dataset");

    std::vector<std::vector<double>> rows;
    rows.reserve(raw.size());
    for (const auto& r : raw) rows.push_back(transform(model, r));
    model.pca = pca_fit(rows, std::min(model.kept.size(), rows.size()));
    return model;
}

FeatureVector bof_apply(const BofModel& model, std::span<const double> x, std::size_t n_c) {
    if (n_c > feature_names().size()) {
        throw InvalidParameter("bof: n_c " + std::to_string(n_c) + " exceeds the " +
                               std::to_string(feature_names().size()) + "-feature catalogue");
    }
    auto projected = pca_apply(model.pca, transform(model, extract_features(x)));
    if (n_c > 0 && n_c < projected.values.size()) projected.values.resize(n_c);
    return projected;
}

}  // namespace dlpbench
