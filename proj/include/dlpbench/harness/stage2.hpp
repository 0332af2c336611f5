#pragma once

#include <span>
#include <string>
#include <vector>

#include "dlpbench/clustering/algo_spec.hpp"
#include "dlpbench/harness/config.hpp"
#include "dlpbench/harness/records.hpp"

namespace dlpbench {

/// The approaches to run: every family member crossed with every matrix
/// algorithm, plus optionally k-means and k-shape on the raw series.
struct Stage2Plan {
    std::vector<ParadigmFamily> families;
    std::vector<AlgoSpec> algorithms;
    bool kmeans = true;
    bool kshape = true;
    bool members = false;
    std::vector<std::string> metrics;

    static Stage2Plan from(const Stage2Config& config);
};

/// External validity index by record name (ARI, AMI, NVD1m, PSI) of
/// `assigned` against `truth`; outliers in `truth` are ignored.
double score_partition(const std::string& metric, std::span<const int> truth, std::span<const int> assigned);

/// Clusters every dataset with every approach, using the true cluster count.
/// Families with several members are recorded as "<name>_exp+<algo>", the
/// per-dataset mean over the members. One task per (dataset, member) and per
/// (dataset, raw-series algorithm); restarts draw from a stream keyed by
/// dataset seed and approach id, so results do not depend on threads.
std::vector<ResultRecord> score_clustering(const std::vector<LabeledDataset>& datasets, const Stage2Plan& plan,
                                           std::uint64_t master_seed, unsigned threads);

/// Stage two on baseline datasets of stage2.n series. Figures: heatmap,
/// rank and clique tables for each metric.
RunOutput run_stage2(const ExperimentConfig& config);

}  // namespace dlpbench
