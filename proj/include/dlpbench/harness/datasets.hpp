#pragma once

#include <cstdint>
#include <vector>

#include "dlpbench/core/types.hpp"
#include "dlpbench/synthgen/scenario.hpp"

namespace dlpbench {

/// Seed of replicate `index` of `spec`: the scenario name plus the index,
/// so a record's (scenario, dataset_index) regenerates its dataset.
SeedSpec dataset_seed(const ScenarioSpec& spec, std::uint64_t master_seed, std::size_t index);

/// `replicates` datasets of one scenario, generated in parallel.
std::vector<LabeledDataset> build_replicates(const ScenarioSpec& spec, std::uint64_t master_seed,
                                             std::size_t replicates, unsigned threads,
                                             std::vector<SeedSpec>* seeds = nullptr);

/// Replicate index recorded in the dataset's seed, or `fallback` for
/// datasets that were not generated (real data).
std::size_t dataset_index_of(const LabeledDataset& data, std::size_t fallback);

/// Copy of `data` without its outliers (label -1).
LabeledDataset without_outliers(const LabeledDataset& data);

double mean_of(const std::vector<double>& v);
/// Sample standard deviation; 0 for fewer than two values.
double sd_of(const std::vector<double>& v);

}  // namespace dlpbench
