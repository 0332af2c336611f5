#pragma once

#include <string>
#include <vector>

#include "dlpbench/core/rng.hpp"
#include "dlpbench/core/types.hpp"
#include "dlpbench/synthgen/catalogue.hpp"

namespace dlpbench {

enum class ScenarioKind { Baseline, NoiseSweep, SizeSweep, ClusterCountSweep, Balance, Outliers, Separation, EmulateReal };
enum class BalanceKind { Rare, Dominant, Balanced };
enum class SeparationAxis { Timing, Magnitude, Width };

std::string scenario_kind_name(ScenarioKind kind);
std::string balance_name(BalanceKind kind);
std::string axis_name(SeparationAxis axis);
BalanceKind parse_balance(const std::string& name);
SeparationAxis parse_axis(const std::string& name);

/// Parameters of one scenario dataset. Fields not used by `kind` are ignored.
struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::Baseline;
    /// Clustered series for Baseline, NoiseSweep, SizeSweep and Outliers.
    std::size_t n = 1000;
    /// Baseline only: exactly n / 20 series per cluster, stored in cluster
    /// order, instead of uniformly sampled labels.
    bool equal_sizes = false;
    /// NoiseSweep: sigma_l = sigma_h = sigma.
    double sigma = 0.12;
    /// ClusterCountSweep: clusters drawn without replacement; 50 k* series.
    int k_star = 20;
    BalanceKind balance = BalanceKind::Balanced;
    /// Outliers: series with label -1 added to the n clustered ones.
    std::size_t n_outliers = 0;
    SeparationAxis axis = SeparationAxis::Timing;
    /// Hours for Timing, percent (100 = identical) for Magnitude and squared
    /// half-hour samples for Width.
    double level = 0.0;

    /// Short canonical name, e.g. "baseline", "noise(sigma=0.1)".
    std::string name() const;
    /// Throws InvalidScenarioParams.
    void validate() const;
};

/// Generates the dataset: labels are sampled first from seed's stream, then
/// series i is generated from an independent child stream. The seed and the
/// scenario parameters are recorded in meta.params.
LabeledDataset build_scenario(const ScenarioSpec& spec, const SeedSpec& seed);
LabeledDataset build_scenario(const ScenarioSpec& spec, const Catalogue& catalogue, const SeedSpec& seed);

/// Two clusters of 50 series each, cluster 0 fixed and cluster 1 displaced
/// by `level` along `axis`, stored in cluster order.
LabeledDataset separation_dataset(SeparationAxis axis, double level, const SeedSpec& seed);

/// Real-consumer cluster sizes used by EmulateReal (16 clusters, 268 series).
const std::vector<std::size_t>& emulate_real_counts();
inline constexpr std::size_t kEmulateRealOutliers = 97;
inline constexpr double kEmulateRealSigma = 0.105;

// Scenario grids.
std::vector<double> noise_levels();
std::vector<std::size_t> size_levels();
std::vector<int> cluster_count_levels();
std::vector<std::size_t> outlier_levels();
std::vector<double> timing_levels();
std::vector<double> magnitude_levels();
std::vector<double> width_levels();
std::vector<double> separation_levels(SeparationAxis axis);

}  // namespace dlpbench
