#include "dlpbench/harness/sweeps.hpp"

#include <map>

#include "dlpbench/core/dataset_io.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/harness/datasets.hpp"
#include "dlpbench/harness/stage1.hpp"
#include "dlpbench/harness/stage2.hpp"

namespace dlpbench {

namespace {

constexpr SweepKind kKinds[] = {SweepKind::Noise,    SweepKind::Size,     SweepKind::KCount,
                                SweepKind::Balance,  SweepKind::Outliers, SweepKind::Separation};

template <typename T>
std::vector<double> as_doubles(const std::vector<T>& v) {
    return {v.begin(), v.end()};
}

std::vector<double> numeric_levels(SweepKind kind, const ExperimentConfig& config) {
    if (!config.sweep.levels.empty()) return config.sweep.levels;
    switch (kind) {
        case SweepKind::Noise: return noise_levels();
        case SweepKind::Size: return as_doubles(size_levels());
        case SweepKind::KCount: return as_doubles(cluster_count_levels());
        case SweepKind::Outliers: return as_doubles(outlier_levels());
        case SweepKind::Separation: return separation_levels(config.sweep.axis);
        case SweepKind::Balance: break;
    }
    return {};
}

std::size_t whole(double v, const char* what) {
    if (!(v >= 0.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
        throw ConfigError(std::string("sweep level for ") + what + " must be a non-negative integer");
    }
    return static_cast<std::size_t>(v);
}

// Mean/sd of every (scenario, method, metric) cell, in record order.
FigureTable sweep_table(SweepKind kind, const std::vector<ScenarioSpec>& scenarios,
                        const std::vector<ResultRecord>& records) {
    std::map<std::string, std::string> level_of;
    for (const auto& s : scenarios) level_of[s.name()] = level_label(s);
    std::vector<std::tuple<std::string, std::string, std::string>> order;
    std::map<std::tuple<std::string, std::string, std::string>, std::vector<double>> values;
    for (const auto& r : records) {
        if (r.metric.starts_with("acc_cluster_")) continue;
        auto key = std::tuple{r.scenario, r.method_id, r.metric};
        auto [it, fresh] = values.try_emplace(key);
        if (fresh) order.push_back(key);
        it->second.push_back(r.value);
    }
    FigureTable t{"sweep_" + sweep_kind_name(kind), {"scenario", "level", "method_id", "metric", "mean", "sd", "n"}, {}};
    for (const auto& key : order) {
        const auto& v = values[key];
        const auto& [scenario, method, metric] = key;
        t.rows.push_back({scenario, level_of[scenario], method, metric, format_number(mean_of(v)),
                          format_number(sd_of(v)), std::to_string(v.size())});
    }
    return t;
}

}  // namespace

SweepKind parse_sweep_kind(std::string_view name) {
    for (auto k : kKinds) {
        if (sweep_kind_name(k) == name) return k;
    }
    throw ConfigError("unknown sweep '" + std::string(name) +
                      "' (noise, size, kcount, balance, outliers or separation)");
}

std::string sweep_kind_name(SweepKind kind) {
    switch (kind) {
        case SweepKind::Noise: return "noise";
        case SweepKind::Size: return "size";
        case SweepKind::KCount: return "kcount";
        case SweepKind::Balance: return "balance";
        case SweepKind::Outliers: return "outliers";
        case SweepKind::Separation: return "separation";
    }
    return "?";
}

std::vector<ScenarioSpec> sweep_scenarios(SweepKind kind, const ExperimentConfig& config) {
    std::vector<ScenarioSpec> out;
    if (kind == SweepKind::Balance) {
        for (auto b : {BalanceKind::Rare, BalanceKind::Dominant, BalanceKind::Balanced}) {
            ScenarioSpec s;
            s.kind = ScenarioKind::Balance;
            s.balance = b;
            out.push_back(s);
        }
        return out;
    }
    for (double level : numeric_levels(kind, config)) {
        ScenarioSpec s;
        s.n = config.sweep.n;
        switch (kind) {
            case SweepKind::Noise:
                s.kind = ScenarioKind::NoiseSweep;
                s.sigma = level;
                break;
            case SweepKind::Size:
                s.kind = ScenarioKind::SizeSweep;
                s.n = whole(level, "size");
                break;
            case SweepKind::KCount:
                s.kind = ScenarioKind::ClusterCountSweep;
                s.k_star = static_cast<int>(whole(level, "kcount"));
                break;
            case SweepKind::Outliers:
                s.kind = ScenarioKind::Outliers;
                s.n_outliers = whole(level, "outliers");
                break;
            case SweepKind::Separation:
                s.kind = ScenarioKind::Separation;
                s.axis = config.sweep.axis;
                s.level = level;
                break;
            case SweepKind::Balance: break;
        }
        try {
            s.validate();
        } catch (const Error& e) {
            throw ConfigError(std::string("sweep level: ") + e.what());
        }
        out.push_back(s);
    }
    return out;
}

std::string level_label(const ScenarioSpec& spec) {
    switch (spec.kind) {
        case ScenarioKind::NoiseSweep: return format_number(spec.sigma);
        case ScenarioKind::SizeSweep: return std::to_string(spec.n);
        case ScenarioKind::ClusterCountSweep: return std::to_string(spec.k_star);
        case ScenarioKind::Balance: return balance_name(spec.balance);
        case ScenarioKind::Outliers: return std::to_string(spec.n_outliers);
        case ScenarioKind::Separation: return format_number(spec.level);
        default: return spec.name();
    }
}

std::optional<double> convergence_level(const std::vector<double>& levels, const std::vector<double>& mean_accuracy,
                                        double threshold) {
    if (levels.size() != mean_accuracy.size()) throw LengthMismatch("levels and accuracies differ in length");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (mean_accuracy[i] > threshold) return levels[i];
    }
    return std::nullopt;
}

RunOutput run_sweep(SweepKind kind, const ExperimentConfig& config) {
    RunOutput out;
    const auto scenarios = sweep_scenarios(kind, config);
    if (kind == SweepKind::Separation) {
        const std::size_t reps =
            config.sweep.separation_replicates ? config.sweep.separation_replicates : config.replicates;
        std::vector<ParadigmFamily> families;
        for (const auto& m : config.sweep.separation_methods) families.push_back(method_family(m, GridMode::Default));
        // Curves: mean accuracy per method and level.
        std::map<std::string, std::vector<double>> curve;
        for (const auto& s : scenarios) {
            const auto datasets = build_replicates(s, config.seed, reps, config.threads, &out.seeds);
            auto records = score_1nn(datasets, families, config.threads);
            std::map<std::string, std::vector<double>> acc;
            for (const auto& r : records) {
                if (r.metric == "acc_overall") acc[r.method_id].push_back(r.value);
            }
            for (const auto& f : families) curve[f.report_id()].push_back(mean_of(acc[f.report_id()]));
            out.records.insert(out.records.end(), records.begin(), records.end());
        }
        std::vector<double> levels;
        for (const auto& s : scenarios) levels.push_back(s.level);
        FigureTable conv{"separation_" + axis_name(config.sweep.axis) + "_convergence",
                         {"axis", "method_id", "convergence_level"}, {}};
        for (const auto& f : families) {
            const auto level = convergence_level(levels, curve[f.report_id()]);
            conv.rows.push_back({axis_name(config.sweep.axis), f.report_id(), level ? format_number(*level) : "none"});
        }
        out.figures.push_back(sweep_table(kind, scenarios, out.records));
        out.figures.back().name += "_" + axis_name(config.sweep.axis);
        out.figures.push_back(std::move(conv));
        return out;
    }

    const auto plan = Stage2Plan::from(config.stage2);
    for (const auto& s : scenarios) {
        const auto datasets = build_replicates(s, config.seed, config.replicates, config.threads, &out.seeds);
        auto records = score_clustering(datasets, plan, config.seed, config.threads);
        out.records.insert(out.records.end(), records.begin(), records.end());
    }
    out.figures.push_back(sweep_table(kind, scenarios, out.records));
    return out;
}

}  // namespace dlpbench
