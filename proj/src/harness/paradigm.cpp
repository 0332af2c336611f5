#include "dlpbench/harness/paradigm.hpp"

#include "dlpbench/dissimilarity/pairwise.hpp"
#include "dlpbench/representation/represent.hpp"

namespace dlpbench {

DissimilarityMatrix paradigm_matrix(const Paradigm& p, std::span<const TimeSeries> series, unsigned threads) {
    if (p.is_representation) return representation_matrix(p.rep, series, threads);
    return pairwise_matrix(p.measure, series, threads);
}

ParadigmData evaluate_paradigm(const Paradigm& p, std::span<const TimeSeries> series, unsigned threads) {
    ParadigmData out;
    if (p.is_representation && p.rep.kind != RepKind::SAX) {
        auto features = represent(p.rep, series, threads);
        out.matrix = euclidean_matrix(features, threads);
        out.vectors.reserve(features.size());
        for (auto& f : features) out.vectors.push_back(std::move(f.values));
        return out;
    }
    out.matrix = paradigm_matrix(p, series, threads);
    if (!p.is_representation && p.measure.kind == Measure::ED) {
        for (const auto& s : series) out.vectors.emplace_back(s.values().begin(), s.values().end());
    }
    return out;
}

}  // namespace dlpbench
