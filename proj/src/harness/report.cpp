#include "dlpbench/harness/report.hpp"

#include <map>
#include <set>

#include "dlpbench/core/dataset_io.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/harness/datasets.hpp"
#include "dlpbench/harness/method_id.hpp"
#include "dlpbench/stats/cliques.hpp"

namespace dlpbench {

Summary summarize(const std::vector<ResultRecord>& records, const std::string& metric, std::string_view scenario) {
    Summary s;
    s.metric = metric;
    std::map<std::string, std::size_t> method_index, dataset_index;
    std::map<std::pair<std::size_t, std::size_t>, double> cells;
    for (const auto& r : records) {
        if (r.metric != metric || (!scenario.empty() && r.scenario != scenario)) continue;
        const auto [mi, new_method] = method_index.emplace(r.method_id, s.methods.size());
        if (new_method) s.methods.push_back(r.method_id);
        const auto key = r.scenario + "#" + std::to_string(r.dataset_index);
        const auto [di, new_dataset] = dataset_index.emplace(key, s.datasets.size());
        if (new_dataset) s.datasets.push_back(key);
        if (!cells.emplace(std::pair{mi->second, di->second}, r.value).second) {
            throw InvariantViolation("duplicate " + metric + " record for " + r.method_id + " on " + key);
        }
    }
    if (s.methods.empty()) throw MissingCells("no " + metric + " records");

    std::vector<std::string> missing;
    s.scores.assign(s.methods.size(), std::vector<double>(s.datasets.size()));
    for (std::size_t m = 0; m < s.methods.size(); ++m) {
        for (std::size_t d = 0; d < s.datasets.size(); ++d) {
            const auto it = cells.find({m, d});
            if (it == cells.end()) {
                missing.push_back(s.methods[m] + " @ " + s.datasets[d]);
            } else {
                s.scores[m][d] = it->second;
            }
        }
    }
    if (!missing.empty()) {
        std::string list;
        for (std::size_t i = 0; i < missing.size() && i < 10; ++i) list += (i ? "; " : "") + missing[i];
        if (missing.size() > 10) list += "; ... (" + std::to_string(missing.size()) + " in total)";
        throw MissingCells(metric + ": " + list);
    }

    for (const auto& row : s.scores) s.mean_scores.push_back(mean_of(row));
    s.mean_ranks = mean_ranks(s.scores);
    if (s.methods.size() >= 2 && s.datasets.size() >= 2) {
        s.friedman = friedman(s.scores);
        const auto graph = nonsignificance_graph(s.scores);
        s.cliques = reportable_cliques(maximal_cliques(graph, s.mean_ranks), s.mean_ranks);
    }
    return s;
}

std::vector<FigureTable> summary_tables(const Summary& s, const std::string& stem) {
    FigureTable heat{"heatmap_" + stem, {"paradigm", "algorithm", "method_id", "mean_value", "mean_rank"}, {}};
    FigureTable ranks{"ranks_" + stem, {"method_id", "mean_rank", "mean_value"}, {}};
    for (std::size_t m = 0; m < s.methods.size(); ++m) {
        const auto [paradigm, algorithm] = split_approach_id(s.methods[m]);
        heat.rows.push_back({paradigm, algorithm, s.methods[m], format_number(s.mean_scores[m]),
                             format_number(s.mean_ranks[m])});
        ranks.rows.push_back({s.methods[m], format_number(s.mean_ranks[m]), format_number(s.mean_scores[m])});
    }
    FigureTable cliques{"cliques_" + stem, {"clique", "method_id", "mean_rank"}, {}};
    for (std::size_t c = 0; c < s.cliques.size(); ++c) {
        for (int m : s.cliques[c]) {
            const auto i = static_cast<std::size_t>(m);
            cliques.rows.push_back({std::to_string(c), s.methods[i], format_number(s.mean_ranks[i])});
        }
    }
    FigureTable tests{"tests_" + stem, {"metric", "methods", "datasets", "friedman_statistic", "friedman_p"}, {}};
    tests.rows.push_back({s.metric, std::to_string(s.methods.size()), std::to_string(s.datasets.size()),
                          s.friedman ? format_number(s.friedman->statistic) : "",
                          s.friedman ? format_number(s.friedman->p) : ""});
    return {heat, ranks, cliques, tests};
}

std::string table_stem(std::string_view text) {
    std::string out;
    for (char c : text) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.';
        if (keep) {
            out += c;
        } else if (!out.empty() && out.back() != '_') {
            out += '_';
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

std::vector<FigureTable> report_figures(const std::vector<ResultRecord>& records) {
    std::vector<std::pair<std::string, std::string>> groups;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& r : records) {
        if (r.metric.starts_with("acc_cluster_")) continue;
        if (seen.emplace(r.scenario, r.metric).second) groups.emplace_back(r.scenario, r.metric);
    }
    std::vector<FigureTable> out;
    for (const auto& [scenario, metric] : groups) {
        auto tables = summary_tables(summarize(records, metric, scenario), table_stem(scenario + "_" + metric));
        for (auto& t : tables) out.push_back(std::move(t));
    }
    return out;
}

}  // namespace dlpbench
