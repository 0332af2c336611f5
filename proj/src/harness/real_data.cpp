#include "dlpbench/harness/real_data.hpp"

#include <map>

#include "dlpbench/core/dataset_io.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/harness/datasets.hpp"
#include "dlpbench/harness/stage2.hpp"
#include "dlpbench/stats/correlation.hpp"

namespace dlpbench {

namespace {

Stage2Plan psi_plan(const ExperimentConfig& config) {
    auto plan = Stage2Plan::from(config.stage2);
    plan.metrics = {"PSI"};
    plan.members = false;
    return plan;
}

ScenarioSpec emulate_spec() {
    ScenarioSpec s;
    s.kind = ScenarioKind::EmulateReal;
    return s;
}

}  // namespace

LabeledDataset load_labeled_csv(const std::filesystem::path& path) {
    ReadOptions options;
    options.normalize = true;
    auto data = read_dataset(path, options);
    data.validate();
    const auto& p = data.meta.params;
    if (const auto sizes = p.find("cluster_sizes"); sizes != p.end() && sizes->is_array()) {
        std::vector<std::size_t> counts(sizes->size(), 0);
        for (int label : data.labels) {
            if (label == kOutlierLabel) continue;
            if (static_cast<std::size_t>(label) >= counts.size()) {
                throw InvariantViolation(path.string() + ": label " + std::to_string(label) +
                                         " outside the sidecar's " + std::to_string(counts.size()) + " clusters");
            }
            ++counts[static_cast<std::size_t>(label)];
        }
        std::size_t clustered = 0;
        for (std::size_t c = 0; c < counts.size(); ++c) {
            const auto expected = (*sizes)[c].get<std::size_t>();
            clustered += expected;
            if (counts[c] != expected) {
                throw InvariantViolation(path.string() + ": cluster " + std::to_string(c) + " has " +
                                         std::to_string(counts[c]) + " series, sidecar says " +
                                         std::to_string(expected));
            }
        }
        if (const auto n = p.find("n"); n != p.end() && n->is_number_unsigned()) {
            const auto expected_outliers = n->get<std::size_t>() - clustered;
            if (data.outlier_count() != expected_outliers) {
                throw InvariantViolation(path.string() + ": " + std::to_string(data.outlier_count()) +
                                         " outliers, sidecar implies " + std::to_string(expected_outliers));
            }
        }
    }
    return data;
}

std::vector<std::pair<std::string, double>> approach_means(const std::vector<ResultRecord>& records,
                                                           const std::string& metric) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<double>> values;
    for (const auto& r : records) {
        if (r.metric != metric) continue;
        auto [it, fresh] = values.try_emplace(r.method_id);
        if (fresh) order.push_back(r.method_id);
        it->second.push_back(r.value);
    }
    std::vector<std::pair<std::string, double>> out;
    for (const auto& id : order) out.emplace_back(id, mean_of(values[id]));
    return out;
}

std::vector<FigureTable> correlation_tables(const std::string& stem, const std::vector<std::string>& methods,
                                            const std::vector<double>& x, const std::vector<double>& y,
                                            const std::string& x_name, const std::string& y_name) {
    FigureTable scatter{"scatter_" + stem, {"method_id", x_name, y_name}, {}};
    for (std::size_t i = 0; i < methods.size(); ++i) {
        scatter.rows.push_back({methods[i], format_number(x[i]), format_number(y[i])});
    }
    FigureTable corr{"correlation_" + stem, {"kind", "r", "p", "n"}, {}};
    for (auto [kind, name] : {std::pair{CorrelationKind::Pearson, "pearson"},
                              std::pair{CorrelationKind::Spearman, "spearman"}}) {
        const auto t = correlation(x, y, kind);
        corr.rows.push_back({name, format_number(t.statistic), format_number(t.p), std::to_string(x.size())});
    }
    return {scatter, corr};
}

RunOutput run_validation(const std::filesystem::path& real_csv, const ExperimentConfig& config) {
    RunOutput out;
    auto real = load_labeled_csv(real_csv);
    real.meta.scenario = "real(" + real_csv.stem().string() + ")";
    const auto plan = psi_plan(config);

    auto real_records = score_clustering({real}, plan, config.seed, config.threads);
    const auto synthetic = build_replicates(emulate_spec(), config.seed, config.replicates, config.threads, &out.seeds);
    auto synthetic_records = score_clustering(synthetic, plan, config.seed, config.threads);

    const auto real_means = approach_means(real_records, "PSI");
    const auto synth_means = approach_means(synthetic_records, "PSI");
    std::map<std::string, double> synth_by_id(synth_means.begin(), synth_means.end());
    std::vector<std::string> methods;
    std::vector<double> x, y;
    for (const auto& [id, value] : real_means) {
        methods.push_back(id);
        x.push_back(synth_by_id.at(id));
        y.push_back(value);
    }
    out.figures = correlation_tables("real", methods, x, y, "synthetic", "real");
    out.records = std::move(real_records);
    out.records.insert(out.records.end(), synthetic_records.begin(), synthetic_records.end());
    return out;
}

ConsistencyResult emulate_consistency(const ExperimentConfig& config) {
    ConsistencyResult result;
    const auto plan = psi_plan(config);
    const auto datasets =
        build_replicates(emulate_spec(), config.seed, 2 * config.replicates, config.threads, &result.output.seeds);
    auto records = score_clustering(datasets, plan, config.seed, config.threads);

    std::vector<ResultRecord> a, b;
    for (const auto& r : records) (r.dataset_index < config.replicates ? a : b).push_back(r);
    const auto mean_a = approach_means(a, "PSI");
    const auto mean_b = approach_means(b, "PSI");
    std::vector<std::string> methods;
    std::vector<double> x, y;
    for (std::size_t i = 0; i < mean_a.size(); ++i) {
        if (mean_a[i].first != mean_b[i].first) throw InvariantViolation("batches disagree on approach order");
        methods.push_back(mean_a[i].first);
        x.push_back(mean_a[i].second);
        y.push_back(mean_b[i].second);
    }
    result.spearman = correlation(x, y, CorrelationKind::Spearman);
    result.output.figures = correlation_tables("emulate", methods, x, y, "batch_a", "batch_b");
    result.output.records = std::move(records);
    return result;
}

}  // namespace dlpbench
