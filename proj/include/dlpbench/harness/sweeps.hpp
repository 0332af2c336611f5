#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlpbench/harness/config.hpp"
#include "dlpbench/harness/records.hpp"

namespace dlpbench {

enum class SweepKind { Noise, Size, KCount, Balance, Outliers, Separation };

SweepKind parse_sweep_kind(std::string_view name);
std::string sweep_kind_name(SweepKind kind);

/// One scenario per level, in grid order (sweep.levels overrides the grid).
std::vector<ScenarioSpec> sweep_scenarios(SweepKind kind, const ExperimentConfig& config);

/// Level of a scenario as written in sweep tables ("0.05", "rare", ...).
std::string level_label(const ScenarioSpec& spec);

/// First level, in order, whose mean accuracy exceeds `threshold`.
std::optional<double> convergence_level(const std::vector<double>& levels, const std::vector<double>& mean_accuracy,
                                        double threshold = 0.99);

/// Runs the sweep. Separation scores each sweep.separation_methods paradigm
/// by 1NN on two-cluster datasets and adds separation_<axis>_convergence;
/// the other kinds run the stage-two pipeline on every level. Every kind
/// writes sweep_<kind> (scenario, level, method_id, metric, mean, sd, n).
RunOutput run_sweep(SweepKind kind, const ExperimentConfig& config);

}  // namespace dlpbench
