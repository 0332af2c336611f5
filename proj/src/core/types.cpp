#include "dlpbench/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw InvariantViolation("time series needs at least 2 samples");
    for (double v : values_) {
        if (!std::isfinite(v)) throw InvariantViolation("time series contains a non-finite sample");
    }
    const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
    if (*lo != 0.0 || *hi != 1.0) {
        throw InvariantViolation("time series is not min-max normalised (min " + std::to_string(*lo) +
                                 ", max " + std::to_string(*hi) + ")");
    }
}

void LabeledDataset::validate() const {
    if (series.size() != labels.size()) {
        throw InvariantViolation("dataset has " + std::to_string(series.size()) + " series but " +
                                 std::to_string(labels.size()) + " labels");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int label = labels[i];
        if (label < kOutlierLabel || (label >= 0 && label >= meta.num_clusters)) {
            throw InvariantViolation("label " + std::to_string(label) + " at row " + std::to_string(i) +
                                     " outside [-1, " + std::to_string(meta.num_clusters) + ")");
        }
    }
}

int LabeledDataset::distinct_clusters() const {
    std::set<int> seen;
    for (int label : labels) {
        if (label >= 0) seen.insert(label);
    }
    return static_cast<int>(seen.size());
}

std::size_t LabeledDataset::outlier_count() const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), kOutlierLabel));
}

DissimilarityMatrix::DissimilarityMatrix(std::size_t n) : n_(n), upper_(n < 2 ? 0 : n * (n - 1) / 2, 0.0) {}

void DissimilarityMatrix::set(std::size_t i, std::size_t j, double value) {
    if (i == j) throw InvariantViolation("diagonal of a dissimilarity matrix is fixed at zero");
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw InvariantViolation("dissimilarity must be finite and non-negative, got " + std::to_string(value));
    }
    upper_[index(i, j)] = value;
}

std::vector<double> DissimilarityMatrix::to_full() const {
    std::vector<double> full(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double v = upper_[index(i, j)];
            full[i * n_ + j] = v;
            full[j * n_ + i] = v;
        }
    }
    return full;
}

DissimilarityMatrix DissimilarityMatrix::from_full(std::span<const double> full, std::size_t n) {
    if (full.size() != n * n) throw InvariantViolation("full matrix has wrong size");
    DissimilarityMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (full[i * n + i] != 0.0) throw InvariantViolation("non-zero diagonal at " + std::to_string(i));
        for (std::size_t j = i + 1; j < n; ++j) {
            if (full[i * n + j] != full[j * n + i]) {
                throw InvariantViolation("matrix not symmetric at (" + std::to_string(i) + ", " +
                                         std::to_string(j) + ")");
            }
            out.set(i, j, full[i * n + j]);
        }
    }
    return out;
}

void Partition::validate() const {
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] < 0 || assignments[i] >= k) {
            throw InvariantViolation("partition label " + std::to_string(assignments[i]) + " at " +
                                     std::to_string(i) + " outside [0, " + std::to_string(k) + ")");
        }
    }
}

int Partition::non_empty() const {
    std::set<int> seen(assignments.begin(), assignments.end());
    return static_cast<int>(seen.size());
}

std::vector<int> canonical_labels(std::span<const int> labels) {
    std::unordered_map<int, int> remap;
    std::vector<int> out;
    out.reserve(labels.size());
    for (int label : labels) {
        auto [it, inserted] = remap.try_emplace(label, static_cast<int>(remap.size()));
        out.push_back(it->second);
    }
    return out;
}

void to_json(nlohmann::json& j, const SeedSpec& s) {
    j = nlohmann::json{{"master_seed", s.master_seed},
                       {"scenario", s.scenario},
                       {"dataset_index", s.dataset_index},
                       {"stage", s.stage}};
}

void from_json(const nlohmann::json& j, SeedSpec& s) {
    j.at("master_seed").get_to(s.master_seed);
    j.at("scenario").get_to(s.scenario);
    j.at("dataset_index").get_to(s.dataset_index);
    j.at("stage").get_to(s.stage);
}

void to_json(nlohmann::json& j, const DatasetMeta& m) {
    j = nlohmann::json{{"scenario", m.scenario},       {"master_seed", m.master_seed},
                       {"sigma_l", m.sigma_l},         {"sigma_h", m.sigma_h},
                       {"num_clusters", m.num_clusters}, {"params", m.params}};
}

void from_json(const nlohmann::json& j, DatasetMeta& m) {
    j.at("scenario").get_to(m.scenario);
    j.at("master_seed").get_to(m.master_seed);
    j.at("sigma_l").get_to(m.sigma_l);
    j.at("sigma_h").get_to(m.sigma_h);
    m.num_clusters = j.value("num_clusters", 0);
    m.params = j.value("params", nlohmann::json::object());
}

}  // namespace dlpbench
