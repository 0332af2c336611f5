#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlpbench/harness/records.hpp"
#include "dlpbench/stats/ranks.hpp"
#include "dlpbench/stats/tests.hpp"

namespace dlpbench {

/// Method-by-dataset view of one metric.
struct Summary {
    std::string metric;
    std::vector<std::string> methods;   // first-seen order
    std::vector<std::string> datasets;  // "<scenario>#<index>", first-seen order
    ScoreTable scores;                  // scores[method][dataset]
    std::vector<double> mean_scores;
    std::vector<double> mean_ranks;
    /// Present with at least two methods and two datasets.
    std::optional<TestResult> friedman;
    /// Reportable non-significance cliques (indices into methods).
    std::vector<std::vector<int>> cliques;
};

/// Builds the summary of `metric` over the records whose scenario equals
/// `scenario` (all scenarios when empty). MissingCells lists the
/// (method, dataset) pairs without a value; duplicates raise
/// InvariantViolation.
Summary summarize(const std::vector<ResultRecord>& records, const std::string& metric,
                  std::string_view scenario = {});

/// heatmap_<stem> (paradigm, algorithm, method_id, mean_value, mean_rank),
/// ranks_<stem> (method_id, mean_rank, mean_value), cliques_<stem>
/// (clique, method_id, mean_rank) and tests_<stem> (Friedman result).
std::vector<FigureTable> summary_tables(const Summary& s, const std::string& stem);

/// File-name-safe form of a scenario or metric name.
std::string table_stem(std::string_view text);

/// Summary tables for every (scenario, metric) present, skipping the
/// per-cluster accuracies.
std::vector<FigureTable> report_figures(const std::vector<ResultRecord>& records);

}  // namespace dlpbench
