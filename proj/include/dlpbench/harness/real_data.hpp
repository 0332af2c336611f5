#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dlpbench/harness/config.hpp"
#include "dlpbench/harness/records.hpp"
#include "dlpbench/stats/tests.hpp"

namespace dlpbench {

/// Reads a labelled dataset CSV (`id,label,v0,...,v47`), min-max
/// normalising rows that are not normalised yet. When the sidecar records
/// cluster_sizes (and n), the label histogram must match them
/// (InvariantViolation otherwise).
LabeledDataset load_labeled_csv(const std::filesystem::path& path);

/// Mean of `metric` per approach over the given records, in first-seen order.
std::vector<std::pair<std::string, double>> approach_means(const std::vector<ResultRecord>& records,
                                                           const std::string& metric);

/// Pearson and Spearman rows for paired per-approach scores, plus the
/// scatter table (method_id, x_name, y_name).
std::vector<FigureTable> correlation_tables(const std::string& stem, const std::vector<std::string>& methods,
                                            const std::vector<double>& x, const std::vector<double>& y,
                                            const std::string& x_name, const std::string& y_name);

/// Scores the real dataset and `replicates` EmulateReal datasets with the
/// stage-two plan and correlates the per-approach mean PSI (outliers
/// ignored). Figures: scatter_real and correlation_real.
RunOutput run_validation(const std::filesystem::path& real_csv, const ExperimentConfig& config);

/// Self-consistency of the EmulateReal scenario: replicates 0..r-1 and
/// r..2r-1 form two disjoint batches; per-approach mean PSI of the two
/// batches is compared by Spearman correlation.
struct ConsistencyResult {
    RunOutput output;
    TestResult spearman;
};
ConsistencyResult emulate_consistency(const ExperimentConfig& config);

}  // namespace dlpbench
