#include "dlpbench/synthgen/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dlpbench/core/dataset_io.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/synthgen/generator.hpp"
#include "dlpbench/synthgen/outliers.hpp"

namespace dlpbench {

namespace {

constexpr std::uint64_t kOutlierTagBase = std::uint64_t{1} << 40;
constexpr std::size_t kSeparationClusterSize = 50;

int to_int(std::int64_t v) { return static_cast<int>(v); }

std::vector<int> uniform_labels(std::size_t n, int clusters, Rng& rng) {
    std::vector<int> labels(n);
    for (auto& l : labels) l = to_int(rng.discrete_uniform(0, clusters - 1));
    return labels;
}

/// One cluster of fixed size, the rest sampled uniformly with a floor of 10
/// per cluster, until `total` labels exist. Returned shuffled.
std::vector<int> skewed_labels(std::size_t fixed_size, std::size_t total, int clusters, Rng& rng) {
    const int special = to_int(rng.discrete_uniform(0, clusters - 1));
    std::vector<int> labels(fixed_size, special);
    std::vector<int> others;
    for (int c = 0; c < clusters; ++c) {
        if (c == special) continue;
        others.push_back(c);
        labels.insert(labels.end(), 10, c);
    }
    while (labels.size() < total) {
        labels.push_back(others[static_cast<std::size_t>(rng.discrete_uniform(0, static_cast<std::int64_t>(others.size()) - 1))]);
    }
    rng.shuffle(std::span<int>(labels));
    return labels;
}

/// Picks k of n cluster ids without replacement, returned ascending.
std::vector<int> choose_clusters(int k, int n, Rng& rng) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(std::span<int>(ids));
    ids.resize(static_cast<std::size_t>(k));
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::string level_text(double v) { return format_number(v); }

}  // namespace

std::string scenario_kind_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Baseline: return "baseline";
        case ScenarioKind::NoiseSweep: return "noise";
        case ScenarioKind::SizeSweep: return "size";
        case ScenarioKind::ClusterCountSweep: return "kcount";
        case ScenarioKind::Balance: return "balance";
        case ScenarioKind::Outliers: return "outliers";
        case ScenarioKind::Separation: return "separation";
        case ScenarioKind::EmulateReal: return "emulate_real";
    }
    return "unknown";
}

std::string balance_name(BalanceKind kind) {
    switch (kind) {
        case BalanceKind::Rare: return "rare";
        case BalanceKind::Dominant: return "dominant";
        case BalanceKind::Balanced: return "balanced";
    }
    return "unknown";
}

std::string axis_name(SeparationAxis axis) {
    switch (axis) {
        case SeparationAxis::Timing: return "timing";
        case SeparationAxis::Magnitude: return "magnitude";
        case SeparationAxis::Width: return "width";
    }
    return "unknown";
}

BalanceKind parse_balance(const std::string& name) {
    for (auto k : {BalanceKind::Rare, BalanceKind::Dominant, BalanceKind::Balanced}) {
        if (balance_name(k) == name) return k;
    }
    throw InvalidScenarioParams("unknown balance kind '" + name + "'");
}

SeparationAxis parse_axis(const std::string& name) {
    for (auto a : {SeparationAxis::Timing, SeparationAxis::Magnitude, SeparationAxis::Width}) {
        if (axis_name(a) == name) return a;
    }
    throw InvalidScenarioParams("unknown separation axis '" + name + "'");
}

std::string ScenarioSpec::name() const {
    switch (kind) {
        case ScenarioKind::Baseline:
            return equal_sizes ? "baseline(n=" + std::to_string(n) + ",equal)" : "baseline(n=" + std::to_string(n) + ")";
        case ScenarioKind::NoiseSweep: return "noise(sigma=" + level_text(sigma) + ")";
        case ScenarioKind::SizeSweep: return "size(n=" + std::to_string(n) + ")";
        case ScenarioKind::ClusterCountSweep: return "kcount(k=" + std::to_string(k_star) + ")";
        case ScenarioKind::Balance: return "balance(" + balance_name(balance) + ")";
        case ScenarioKind::Outliers: return "outliers(n_o=" + std::to_string(n_outliers) + ")";
        case ScenarioKind::Separation: return "separation(" + axis_name(axis) + "=" + level_text(level) + ")";
        case ScenarioKind::EmulateReal: return "emulate_real";
    }
    return "unknown";
}

void ScenarioSpec::validate() const {
    auto fail = [&](const std::string& why) { throw InvalidScenarioParams(name() + ": " + why); };
    switch (kind) {
        case ScenarioKind::Baseline:
            if (n == 0) fail("n must be positive");
            if (equal_sizes && n % 20 != 0) fail("equal cluster sizes need n divisible by 20");
            break;
        case ScenarioKind::NoiseSweep:
            if (!(sigma > 0.0) || !std::isfinite(sigma)) fail("sigma must be positive");
            if (n == 0) fail("n must be positive");
            break;
        case ScenarioKind::SizeSweep:
        case ScenarioKind::Outliers:
            if (n == 0) fail("n must be positive");
            break;
        case ScenarioKind::ClusterCountSweep:
            if (k_star < 2 || k_star > 20) fail("k* must lie in 2..20");
            break;
        case ScenarioKind::Balance:
        case ScenarioKind::EmulateReal:
            break;
        case ScenarioKind::Separation: {
            const auto grid = separation_levels(axis);
            const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
            if (!(level >= *lo && level <= *hi)) {
                fail("level " + level_text(level) + " outside [" + level_text(*lo) + ", " + level_text(*hi) + "]");
            }
            break;
        }
    }
}

LabeledDataset build_scenario(const ScenarioSpec& spec, const SeedSpec& seed) {
    return build_scenario(spec, default_catalogue(), seed);
}

LabeledDataset build_scenario(const ScenarioSpec& spec, const Catalogue& catalogue, const SeedSpec& seed) {
    spec.validate();
    const int n_shapes = static_cast<int>(catalogue.shapes.size());
    if (n_shapes < 20 && spec.kind != ScenarioKind::Separation) {
        throw InvalidScenarioParams("catalogue has " + std::to_string(n_shapes) + " shapes, need 20");
    }
    const Rng root(seed);
    Rng label_rng = root.split(0);

    LabeledDataset data;
    data.meta.scenario = spec.name();
    data.meta.master_seed = seed.master_seed;
    StarParams params;
    std::vector<const ShapeSpec*> shapes;  // shape per label
    std::vector<ShapeSpec> owned;
    std::vector<int> labels;
    std::size_t n_outliers = 0;
    nlohmann::json extra = nlohmann::json::object();

    for (const auto& s : catalogue.shapes) shapes.push_back(&s);
    int clusters = 20;

    switch (spec.kind) {
        case ScenarioKind::Baseline:
            if (spec.equal_sizes) {
                for (int c = 0; c < 20; ++c) labels.insert(labels.end(), spec.n / 20, c);
            } else {
                labels = uniform_labels(spec.n, 20, label_rng);
            }
            break;
        case ScenarioKind::NoiseSweep:
            params.sigma_l = params.sigma_h = spec.sigma;
            labels = uniform_labels(spec.n, 20, label_rng);
            break;
        case ScenarioKind::SizeSweep:
            labels = uniform_labels(spec.n, 20, label_rng);
            break;
        case ScenarioKind::ClusterCountSweep: {
            const auto ids = choose_clusters(spec.k_star, 20, label_rng);
            labels = uniform_labels(static_cast<std::size_t>(50 * spec.k_star), spec.k_star, label_rng);
            shapes.clear();
            for (int id : ids) shapes.push_back(&catalogue.shapes[static_cast<std::size_t>(id)]);
            clusters = spec.k_star;
            extra["cluster_ids"] = ids;
            break;
        }
        case ScenarioKind::Balance:
            if (spec.balance == BalanceKind::Rare) {
                labels = skewed_labels(5, 1000, 20, label_rng);
            } else if (spec.balance == BalanceKind::Dominant) {
                labels = skewed_labels(500, 1000, 20, label_rng);
            } else {
                labels = uniform_labels(1000, 20, label_rng);
            }
            break;
        case ScenarioKind::Outliers:
            labels = uniform_labels(spec.n, 20, label_rng);
            n_outliers = spec.n_outliers;
            break;
        case ScenarioKind::EmulateReal: {
            params.sigma_l = params.sigma_h = kEmulateRealSigma;
            const auto ids = choose_clusters(16, 20, label_rng);
            auto counts = emulate_real_counts();
            label_rng.shuffle(std::span<std::size_t>(counts));
            for (int c = 0; c < 16; ++c) labels.insert(labels.end(), counts[static_cast<std::size_t>(c)], c);
            label_rng.shuffle(std::span<int>(labels));
            shapes.clear();
            for (int id : ids) shapes.push_back(&catalogue.shapes[static_cast<std::size_t>(id)]);
            clusters = 16;
            n_outliers = kEmulateRealOutliers;
            extra["cluster_ids"] = ids;
            extra["cluster_sizes"] = counts;
            break;
        }
        case ScenarioKind::Separation: {
            const SeparationSpec* base = nullptr;
            ShapeSpec moved;
            switch (spec.axis) {
                case SeparationAxis::Timing:
                    base = &catalogue.timing;
                    moved = shift_component(base->shape, base->component, spec.level);
                    break;
                case SeparationAxis::Magnitude:
                    base = &catalogue.magnitude;
                    moved = scale_magnitude(base->shape, base->component, spec.level / 100.0);
                    break;
                case SeparationAxis::Width:
                    base = &catalogue.width;
                    moved = widen_peak(base->shape, base->component, spec.level);
                    break;
            }
            moved.validate();
            owned = {base->shape, moved};
            shapes = {&owned[0], &owned[1]};
            labels.assign(kSeparationClusterSize, 0);
            labels.insert(labels.end(), kSeparationClusterSize, 1);
            clusters = 2;
            extra["axis"] = axis_name(spec.axis);
            extra["level"] = spec.level;
            break;
        }
    }

    data.meta.sigma_l = params.sigma_l;
    data.meta.sigma_h = params.sigma_h;
    data.meta.num_clusters = clusters;
    data.series.reserve(labels.size() + n_outliers);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Rng series_rng = root.split(i + 1);
        data.series.push_back(gen_dlp(*shapes[static_cast<std::size_t>(labels[i])], params, series_rng));
    }
    for (std::size_t j = 0; j < n_outliers; ++j) {
        Rng outlier_rng = root.split(kOutlierTagBase + j);
        data.series.push_back(gen_outlier(catalogue.outliers, params, outlier_rng));
    }
    data.labels = std::move(labels);
    data.labels.insert(data.labels.end(), n_outliers, kOutlierLabel);

    nlohmann::json p = extra;
    p["kind"] = scenario_kind_name(spec.kind);
    p["seed"] = seed;
    p["catalogue_version"] = catalogue.version;
    switch (spec.kind) {
        case ScenarioKind::NoiseSweep: p["sigma"] = spec.sigma; break;
        case ScenarioKind::ClusterCountSweep: p["k_star"] = spec.k_star; break;
        case ScenarioKind::Balance: p["balance"] = balance_name(spec.balance); break;
        case ScenarioKind::Outliers: p["n_outliers"] = spec.n_outliers; break;
        default: break;
    }
    p["n"] = data.labels.size();
    data.meta.params = std::move(p);
    data.validate();
    return data;
}

LabeledDataset separation_dataset(SeparationAxis axis, double level, const SeedSpec& seed) {
    ScenarioSpec spec;
    spec.kind = ScenarioKind::Separation;
    spec.axis = axis;
    spec.level = level;
    return build_scenario(spec, seed);
}

const std::vector<std::size_t>& emulate_real_counts() {
    static const std::vector<std::size_t> counts{45, 38, 30, 24, 20, 18, 16, 14, 12, 11, 10, 8, 7, 6, 5, 4};
    return counts;
}

std::vector<double> noise_levels() {
    std::vector<double> out;
    for (int i = 1; i <= 7; ++i) out.push_back(i * 5 / 100.0);
    return out;
}

std::vector<std::size_t> size_levels() { return {500, 1000, 2000, 4000}; }
std::vector<int> cluster_count_levels() { return {8, 12, 16, 20}; }
std::vector<std::size_t> outlier_levels() { return {0, 25, 50, 100, 250, 500, 1000}; }

std::vector<double> timing_levels() {
    std::vector<double> out;
    for (int i = 0; i < 40; ++i) out.push_back(i * 5 / 100.0);  // 0 .. 1.95
    for (int i = 0; i < 20; ++i) out.push_back((20 + i) / 10.0);  // 2 .. 3.9
    out.insert(out.end(), {4.0, 4.5, 5.0});
    return out;
}

std::vector<double> magnitude_levels() {
    std::vector<double> out;
    for (int p = 100; p >= 0; --p) out.push_back(p);
    return out;
}

std::vector<double> width_levels() {
    std::vector<double> out;
    for (int v = 0; v <= 80; ++v) out.push_back(v);
    return out;
}

std::vector<double> separation_levels(SeparationAxis axis) {
    switch (axis) {
        case SeparationAxis::Timing: return timing_levels();
        case SeparationAxis::Magnitude: return magnitude_levels();
        case SeparationAxis::Width: return width_levels();
    }
    return {};
}

}  // namespace dlpbench
