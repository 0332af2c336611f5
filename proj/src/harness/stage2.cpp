#include "dlpbench/harness/stage2.hpp"

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/parallel.hpp"
#include "dlpbench/evaluation/validity.hpp"
#include "dlpbench/harness/datasets.hpp"
#include "dlpbench/harness/paradigm.hpp"
#include "dlpbench/harness/report.hpp"

namespace dlpbench {

namespace {

// Scores of one task: [algorithm][metric].
using TaskScores = std::vector<std::vector<double>>;

struct Task {
    std::size_t dataset;
    const Paradigm* paradigm;  // null for raw-series algorithms
    const AlgoSpec* raw_algo;
};

Rng approach_rng(const LabeledDataset& data, std::uint64_t master_seed, std::size_t index, const std::string& id) {
    return Rng(SeedSpec{master_seed, data.meta.scenario, index, 2}).split(fnv1a64(id));
}

std::vector<double> score_all(const std::vector<std::string>& metrics, const LabeledDataset& data,
                              const Partition& part) {
    std::vector<double> out;
    for (const auto& m : metrics) out.push_back(score_partition(m, data.labels, part.assignments));
    return out;
}

}  // namespace

Stage2Plan Stage2Plan::from(const Stage2Config& config) {
    Stage2Plan plan;
    for (const auto& p : config.paradigms) plan.families.push_back(method_family(p, config.mode));
    for (const auto& a : config.algorithms) plan.algorithms.push_back(AlgoSpec::parse(a));
    plan.kmeans = config.kmeans;
    plan.kshape = config.kshape;
    plan.members = config.members;
    plan.metrics = config.metrics;
    return plan;
}

double score_partition(const std::string& metric, std::span<const int> truth, std::span<const int> assigned) {
    const auto [t, a] = filter_outliers(truth, assigned);
    if (metric == "ARI") return ari(a, t);
    if (metric == "AMI") return ami(a, t);
    if (metric == "NVD1m") return one_minus_nvd(a, t);
    if (metric == "PSI") return psi(a, t);
    throw ConfigError("unknown clustering metric '" + metric + "'");
}

std::vector<ResultRecord> score_clustering(const std::vector<LabeledDataset>& datasets, const Stage2Plan& plan,
                                           std::uint64_t master_seed, unsigned threads) {
    static const AlgoSpec kmeans_spec = AlgoSpec::defaults(AlgoKind::KMeans);
    static const AlgoSpec kshape_spec = AlgoSpec::defaults(AlgoKind::KShape);
    std::vector<const AlgoSpec*> raw_algos;
    if (plan.kmeans) raw_algos.push_back(&kmeans_spec);
    if (plan.kshape) raw_algos.push_back(&kshape_spec);

    std::vector<Task> tasks;
    for (std::size_t d = 0; d < datasets.size(); ++d) {
        for (const auto& f : plan.families) {
            for (const auto& p : f.members) tasks.push_back({d, &p, nullptr});
        }
        for (const auto* a : raw_algos) tasks.push_back({d, nullptr, a});
    }

    std::vector<TaskScores> scores(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t t) {
        const auto& task = tasks[t];
        const auto& data = datasets[task.dataset];
        const auto index = dataset_index_of(data, task.dataset);
        const int k = data.distinct_clusters();
        std::string current;
        try {
            if (task.raw_algo) {
                current = task.raw_algo->id();
                ClusterInput input;
                input.series = data.series;
                const auto part = cluster(*task.raw_algo, input, k, approach_rng(data, master_seed, index, current), 1);
                scores[t].push_back(score_all(plan.metrics, data, part));
                return;
            }
            current = task.paradigm->id();
            const auto pd = evaluate_paradigm(*task.paradigm, data.series, 1);
            ClusterInput input;
            input.matrix = &pd.matrix;
            input.vectors = pd.vectors;
            input.series = data.series;
            for (const auto& algo : plan.algorithms) {
                current = approach_id(task.paradigm->id(), algo);
                const auto part = cluster(algo, input, k, approach_rng(data, master_seed, index, current), 1);
                scores[t].push_back(score_all(plan.metrics, data, part));
            }
        } catch (const Error& e) {
            throw Error(data.meta.scenario + " #" + std::to_string(index) + " " + current + ": " + e.what());
        }
    });

    std::vector<ResultRecord> records;
    std::size_t t = 0;
    for (std::size_t d = 0; d < datasets.size(); ++d) {
        const auto& data = datasets[d];
        const auto index = dataset_index_of(data, d);
        auto add = [&](const std::string& id, const std::string& params, std::size_t metric, double value) {
            records.push_back({data.meta.scenario, index, id, params, plan.metrics[metric], value});
        };
        for (const auto& f : plan.families) {
            const std::size_t first = t;
            const std::size_t count = f.members.size();
            t += count;
            for (std::size_t a = 0; a < plan.algorithms.size(); ++a) {
                const auto id = approach_id(f.report_id(), plan.algorithms[a]);
                const auto params = count == 1 ? f.members.front().params() : "members=" + std::to_string(count);
                for (std::size_t m = 0; m < plan.metrics.size(); ++m) {
                    double sum = 0.0;
                    for (std::size_t j = 0; j < count; ++j) sum += scores[first + j][a][m];
                    add(id, params, m, sum / static_cast<double>(count));
                }
                if (!plan.members || count == 1) continue;
                for (std::size_t j = 0; j < count; ++j) {
                    const auto& p = f.members[j];
                    for (std::size_t m = 0; m < plan.metrics.size(); ++m) {
                        add(approach_id(p.id(), plan.algorithms[a]), p.params(), m, scores[first + j][a][m]);
                    }
                }
            }
        }
        for (const auto* algo : raw_algos) {
            for (std::size_t m = 0; m < plan.metrics.size(); ++m) add(algo->id(), "", m, scores[t][0][m]);
            ++t;
        }
    }
    return records;
}

RunOutput run_stage2(const ExperimentConfig& config) {
    RunOutput out;
    ScenarioSpec spec;
    spec.kind = ScenarioKind::Baseline;
    spec.n = config.stage2.n;
    const auto datasets = build_replicates(spec, config.seed, config.replicates, config.threads, &out.seeds);
    out.records = score_clustering(datasets, Stage2Plan::from(config.stage2), config.seed, config.threads);
    auto figures = report_figures(out.records);
    out.figures = std::move(figures);
    return out;
}

}  // namespace dlpbench
