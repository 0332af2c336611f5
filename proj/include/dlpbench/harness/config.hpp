#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dlpbench/harness/method_id.hpp"
#include "dlpbench/synthgen/scenario.hpp"

namespace dlpbench {

struct Stage1Config {
    GridMode mode = GridMode::Default;
    /// Stage-one method names (see stage1_method_names) or exact paradigm ids.
    std::vector<std::string> methods = stage1_method_names();
    std::size_t n = 200;
};

struct Stage2Config {
    GridMode mode = GridMode::Retained;
    std::vector<std::string> paradigms = retained_method_names();
    /// Matrix-based algorithm ids crossed with every paradigm.
    std::vector<std::string> algorithms;
    bool kmeans = true;
    bool kshape = true;
    /// Also record every grid member, not just the X_exp mean.
    bool members = false;
    std::vector<std::string> metrics = {"ARI", "AMI", "NVD1m", "PSI"};
    std::size_t n = 1000;

    Stage2Config();
};

struct SweepConfig {
    /// Clustered series per dataset for the noise and outlier sweeps.
    std::size_t n = 1000;
    /// Replaces the scenario grid when non-empty (numeric sweeps only).
    std::vector<double> levels;
    /// Separation sweep: axis and the paradigm ids scored by 1NN.
    SeparationAxis axis = SeparationAxis::Timing;
    std::vector<std::string> separation_methods = {"ed", "sbd", "dtw(w=1)", "dtw(w=6)", "ksd(w=1)", "ksd(w=3)"};
    /// Separation sweep replicates; 0 uses the top-level count.
    std::size_t separation_replicates = 0;
};

/// Experiment configuration, read from TOML. Threads and the output
/// directory do not affect results and are left out of the hash.
struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::size_t replicates = 10;
    unsigned threads = 0;
    std::filesystem::path out = "results";
    ScenarioSpec generate;
    Stage1Config stage1;
    Stage2Config stage2;
    SweepConfig sweep;

    /// ConfigError naming the first unresolvable method id or bad value.
    void validate() const;
    /// Canonical JSON of every result-affecting field.
    nlohmann::json to_json() const;
    /// FNV-1a 64 of to_json().dump().
    std::uint64_t hash() const;
};

ExperimentConfig parse_config(std::string_view toml_text);
ExperimentConfig load_config(const std::filesystem::path& path);

ScenarioKind parse_scenario_kind(std::string_view name);

}  // namespace dlpbench
