#include "dlpbench/harness/stage1.hpp"

#include <algorithm>
#include <map>

#include "dlpbench/core/dataset_io.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/parallel.hpp"
#include "dlpbench/evaluation/nearest_neighbour.hpp"
#include "dlpbench/harness/datasets.hpp"
#include "dlpbench/harness/paradigm.hpp"

namespace dlpbench {

namespace {

struct Task {
    std::size_t dataset;
    const Paradigm* paradigm;
};

std::string cluster_metric(int c) { return "acc_cluster_" + std::to_string(c); }

}  // namespace

std::vector<ResultRecord> score_1nn(const std::vector<LabeledDataset>& datasets,
                                    const std::vector<ParadigmFamily>& families, unsigned threads) {
    std::vector<LabeledDataset> clean;
    clean.reserve(datasets.size());
    for (const auto& d : datasets) clean.push_back(d.outlier_count() ? without_outliers(d) : d);

    std::vector<Task> tasks;
    for (std::size_t d = 0; d < clean.size(); ++d) {
        for (const auto& f : families) {
            for (const auto& p : f.members) tasks.push_back({d, &p});
        }
    }
    std::vector<NnResult> results(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t t) {
        const auto& data = clean[tasks[t].dataset];
        try {
            results[t] = loo_1nn(paradigm_matrix(*tasks[t].paradigm, data.series, 1), data.labels);
        } catch (const Error& e) {
            throw Error(data.meta.scenario + " #" + std::to_string(tasks[t].dataset) + " " +
                        tasks[t].paradigm->id() + ": " + e.what());
        }
    });

    std::vector<ResultRecord> records;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const auto& data = clean[tasks[t].dataset];
        const auto& p = *tasks[t].paradigm;
        const std::size_t index = dataset_index_of(data, tasks[t].dataset);
        auto add = [&](const std::string& metric, double value) {
            records.push_back({data.meta.scenario, index, p.id(), p.params(), metric, value});
        };
        add("acc_overall", results[t].overall);
        for (const auto& [c, acc] : results[t].per_cluster) add(cluster_metric(c), acc);
    }
    return records;
}

FigureTable stage1_summary(const std::vector<ResultRecord>& records, const std::vector<ParadigmFamily>& families) {
    std::map<std::string, std::vector<double>> overall;
    for (const auto& r : records) {
        if (r.metric == "acc_overall") overall[r.method_id].push_back(r.value);
    }
    FigureTable t{"stage1_summary", {"family", "default_id", "default_mean", "best_id", "best_mean", "exp_mean"}, {}};
    for (const auto& f : families) {
        std::string best_id;
        double best = -1.0;
        std::vector<double> means;
        for (const auto& p : f.members) {
            const auto it = overall.find(p.id());
            if (it == overall.end()) continue;
            const double m = mean_of(it->second);
            means.push_back(m);
            if (m > best) {
                best = m;
                best_id = p.id();
            }
        }
        if (means.empty()) continue;
        std::string default_id, default_mean;
        if (f.name.find('(') == std::string::npos) {
            const auto def = method_family(f.name, GridMode::Default).members.front().id();
            if (const auto it = overall.find(def); it != overall.end()) {
                default_id = def;
                default_mean = format_number(mean_of(it->second));
            }
        }
        t.rows.push_back({f.name, default_id, default_mean, best_id, format_number(best), format_number(mean_of(means))});
    }
    return t;
}

RunOutput run_stage1(const ExperimentConfig& config) {
    RunOutput out;
    ScenarioSpec spec;
    spec.kind = ScenarioKind::Baseline;
    spec.n = config.stage1.n;
    spec.equal_sizes = true;
    const auto datasets = build_replicates(spec, config.seed, config.replicates, config.threads, &out.seeds);

    std::vector<ParadigmFamily> families;
    for (const auto& m : config.stage1.methods) families.push_back(method_family(m, config.stage1.mode));
    out.records = score_1nn(datasets, families, config.threads);

    // Aggregates over datasets, in first-seen method order.
    std::vector<std::string> order;
    std::map<std::string, std::vector<double>> overall;
    std::map<std::string, std::map<int, std::vector<double>>> by_cluster;
    std::map<std::string, std::string> family_of;
    for (const auto& f : families) {
        for (const auto& p : f.members) family_of.emplace(p.id(), f.name);
    }
    for (const auto& r : out.records) {
        if (r.metric == "acc_overall") {
            if (!overall.contains(r.method_id)) order.push_back(r.method_id);
            overall[r.method_id].push_back(r.value);
        } else {
            const int c = std::stoi(r.metric.substr(std::string("acc_cluster_").size()));
            by_cluster[r.method_id][c].push_back(r.value);
        }
    }
    FigureTable acc{"stage1_accuracy",
                    {"method_id", "family", "mean_overall", "sd_overall", "min_cluster_mean", "n_datasets"},
                    {}};
    FigureTable cells{"stage1_by_cluster", {"method_id", "cluster", "mean_accuracy"}, {}};
    for (const auto& id : order) {
        double worst = 1.0;
        for (const auto& [c, v] : by_cluster[id]) {
            const double m = mean_of(v);
            worst = std::min(worst, m);
            cells.rows.push_back({id, std::to_string(c), format_number(m)});
        }
        acc.rows.push_back({id, family_of[id], format_number(mean_of(overall[id])), format_number(sd_of(overall[id])),
                            format_number(worst), std::to_string(overall[id].size())});
    }
    out.figures.push_back(std::move(acc));
    out.figures.push_back(std::move(cells));
    out.figures.push_back(stage1_summary(out.records, families));
    return out;
}

}  // namespace dlpbench
