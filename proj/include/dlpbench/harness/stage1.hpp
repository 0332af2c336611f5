#pragma once

#include <string>
#include <vector>

#include "dlpbench/harness/config.hpp"
#include "dlpbench/harness/records.hpp"

namespace dlpbench {

/// Leave-one-out 1NN records (acc_overall and acc_cluster_<c>) for every
/// member of every family on `datasets`. Outliers are dropped first. One
/// task per (dataset, member); the record order does not depend on threads.
std::vector<ResultRecord> score_1nn(const std::vector<LabeledDataset>& datasets,
                                    const std::vector<ParadigmFamily>& families, unsigned threads);

/// Stage one: baseline datasets of stage1.n series with equal cluster sizes,
/// scored by 1NN. Figures: stage1_accuracy, stage1_by_cluster and
/// stage1_summary (default, best and mean setting per method).
RunOutput run_stage1(const ExperimentConfig& config);

/// Per-family summary rows built from 1NN records.
FigureTable stage1_summary(const std::vector<ResultRecord>& records, const std::vector<ParadigmFamily>& families);

}  // namespace dlpbench
