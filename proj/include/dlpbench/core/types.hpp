#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlpbench/core/rng.hpp"

namespace dlpbench {

/// Number of half-hourly samples in a daily load profile.
inline constexpr std::size_t kDlpLength = 48;

/// A min-max normalised series: finite samples, minimum exactly 0 and maximum
/// exactly 1. Generator output always has kDlpLength samples.
class TimeSeries {
public:
    TimeSeries() = default;
    /// Validates the invariants; throws InvariantViolation.
    explicit TimeSeries(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    bool operator==(const TimeSeries&) const = default;

private:
    std::vector<double> values_;
};

/// Output of a representation method (dimension fixed per configuration).
struct FeatureVector {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    bool operator==(const FeatureVector&) const = default;
};

/// Label used for outliers in ground truth vectors.
inline constexpr int kOutlierLabel = -1;

struct DatasetMeta {
    std::string scenario;
    std::uint64_t master_seed = 0;
    double sigma_l = 0.0;
    double sigma_h = 0.0;
    /// Number of clusters K; every non-negative label is < K.
    int num_clusters = 0;
    /// Scenario parameters and the SeedSpec the dataset was generated from.
    nlohmann::json params = nlohmann::json::object();

    bool operator==(const DatasetMeta&) const = default;
};

struct LabeledDataset {
    std::vector<TimeSeries> series;
    std::vector<int> labels;
    DatasetMeta meta;

    std::size_t size() const noexcept { return series.size(); }
    /// Throws InvariantViolation when sizes or labels are inconsistent.
    void validate() const;
    /// Number of distinct non-negative labels present.
    int distinct_clusters() const;
    std::size_t outlier_count() const;

    bool operator==(const LabeledDataset&) const = default;
};

/// Symmetric, non-negative, zero-diagonal matrix stored as its strict upper
/// triangle in row-major order.
class DissimilarityMatrix {
public:
    DissimilarityMatrix() = default;
    explicit DissimilarityMatrix(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        return upper_[index(i, j)];
    }
    /// Sets d(i,j) = d(j,i); rejects negative or non-finite values and i == j.
    void set(std::size_t i, std::size_t j, double value);

    std::span<const double> condensed() const noexcept { return upper_; }
    /// Row-major n x n copy.
    std::vector<double> to_full() const;
    /// Builds from a full row-major matrix, validating every invariant.
    static DissimilarityMatrix from_full(std::span<const double> full, std::size_t n);

    bool operator==(const DissimilarityMatrix&) const = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }

    std::size_t n_ = 0;
    std::vector<double> upper_;
};

/// Hard cluster assignment; labels lie in [0, k).
struct Partition {
    std::vector<int> assignments;
    int k = 0;

    std::size_t size() const noexcept { return assignments.size(); }
    /// Throws InvariantViolation when a label lies outside [0, k).
    void validate() const;
    /// Number of non-empty clusters.
    int non_empty() const;

    bool operator==(const Partition&) const = default;
};

/// Relabels so clusters are numbered 0.. in order of first appearance.
std::vector<int> canonical_labels(std::span<const int> labels);

// JSON serialisation (used for sidecars and manifests).
void to_json(nlohmann::json& j, const SeedSpec& s);
void from_json(const nlohmann::json& j, SeedSpec& s);
void to_json(nlohmann::json& j, const DatasetMeta& m);
void from_json(const nlohmann::json& j, DatasetMeta& m);

}  // namespace dlpbench
