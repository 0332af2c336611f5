#include "dlpbench/harness/datasets.hpp"

#include <cmath>
#include <numeric>

#include "dlpbench/core/parallel.hpp"

namespace dlpbench {

SeedSpec dataset_seed(const ScenarioSpec& spec, std::uint64_t master_seed, std::size_t index) {
    return SeedSpec{master_seed, spec.name(), index, 0};
}

std::vector<LabeledDataset> build_replicates(const ScenarioSpec& spec, std::uint64_t master_seed,
                                             std::size_t replicates, unsigned threads,
                                             std::vector<SeedSpec>* seeds) {
    spec.validate();
    std::vector<LabeledDataset> out(replicates);
    parallel_for(replicates, threads, [&](std::size_t r) {
        out[r] = build_scenario(spec, dataset_seed(spec, master_seed, r));
    });
    if (seeds) {
        for (std::size_t r = 0; r < replicates; ++r) seeds->push_back(dataset_seed(spec, master_seed, r));
    }
    return out;
}

std::size_t dataset_index_of(const LabeledDataset& data, std::size_t fallback) {
    const auto seed = data.meta.params.find("seed");
    if (seed == data.meta.params.end() || !seed->is_object()) return fallback;
    return seed->value("dataset_index", fallback);
}

LabeledDataset without_outliers(const LabeledDataset& data) {
    LabeledDataset out;
    out.meta = data.meta;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data.labels[i] == kOutlierLabel) continue;
        out.series.push_back(data.series[i]);
        out.labels.push_back(data.labels[i]);
    }
    return out;
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sd_of(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean_of(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace dlpbench
