#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dlpbench/core/rng.hpp"

namespace dlpbench {

struct ExperimentConfig;

/// One persisted score. `metric` is acc_overall, acc_cluster_<c> (the
/// per-cluster accuracy of cluster c), ARI, AMI, NVD1m or PSI.
struct ResultRecord {
    std::string scenario;
    std::size_t dataset_index = 0;
    std::string method_id;
    std::string params;
    std::string metric;
    double value = 0.0;

    bool operator==(const ResultRecord&) const = default;
};

/// InvariantViolation for a non-finite value or a metric outside the set.
void validate_record(const ResultRecord& r);

/// A CSV consumed by the figures component.
struct FigureTable {
    std::string name;  // file stem under figures_data/
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Output of one harness command.
struct RunOutput {
    std::vector<ResultRecord> records;
    std::vector<FigureTable> figures;
    /// Seed of every generated dataset, in generation order.
    std::vector<SeedSpec> seeds;

    void append(RunOutput&& other);
};

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);
/// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

std::string results_csv(const std::vector<ResultRecord>& records);
void write_results(const std::filesystem::path& path, const std::vector<ResultRecord>& records);
/// ParseError naming the line on malformed input.
std::vector<ResultRecord> read_results(const std::filesystem::path& path);

void write_figure(const std::filesystem::path& dir, const FigureTable& table);
FigureTable read_figure(const std::filesystem::path& csv);

/// Writes results.csv, figures_data/*.csv and manifest.json under `out`.
void write_outputs(const std::filesystem::path& out, const RunOutput& run, const ExperimentConfig& config,
                   const std::string& command);

nlohmann::json make_manifest(const RunOutput& run, const ExperimentConfig& config, const std::string& command);

}  // namespace dlpbench
