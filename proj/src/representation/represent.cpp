#include "dlpbench/representation/represent.hpp"

#include <optional>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/parallel.hpp"
#include "dlpbench/dissimilarity/pairwise.hpp"
#include "dlpbench/representation/paa.hpp"
#include "dlpbench/representation/pca.hpp"

namespace dlpbench {

std::vector<FeatureVector> represent(const RepSpec& spec, std::span<const TimeSeries> series, unsigned threads) {
    spec.validate();
    if (spec.kind == RepKind::SAX) throw InvalidParameter("sax has no feature-vector form");
    std::optional<PcaModel> pca;
    std::optional<BofModel> bof;
    if (spec.kind == RepKind::PCA) pca = pca_fit(series, static_cast<std::size_t>(spec.n_c));
    if (spec.kind == RepKind::BOF) bof = bof_fit(series, spec.norm);

    std::vector<FeatureVector> out(series.size());
    parallel_for(series.size(), threads, [&](std::size_t i) {
        const auto x = series[i].values();
        switch (spec.kind) {
            case RepKind::PAA: out[i] = paa(x, spec.w); break;
            case RepKind::PCA: out[i] = pca_apply(*pca, x); break;
            case RepKind::DWT: out[i] = dwt(x, spec.wavelet, spec.level, spec.coeffs); break;
            case RepKind::GAF: out[i] = gaf(x, static_cast<std::size_t>(spec.n_i), spec.gaf); break;
            case RepKind::MTF: out[i] = mtf(x, static_cast<std::size_t>(spec.n_i), spec.n_b, spec.bins); break;
            case RepKind::BOF: out[i] = bof_apply(*bof, x, static_cast<std::size_t>(spec.n_c)); break;
            case RepKind::SAX: break;
        }
    });
    return out;
}

DissimilarityMatrix representation_matrix(const RepSpec& spec, std::span<const TimeSeries> series,
                                          unsigned threads) {
    if (spec.kind != RepKind::SAX) return euclidean_matrix(represent(spec, series, threads), threads);
    spec.validate();
    std::vector<SaxString> strings(series.size());
    parallel_for(series.size(), threads, [&](std::size_t i) { strings[i] = sax(spec.n_b, spec.bins, series[i].values()); });
    return build_matrix(
        series.size(),
        [&](std::size_t i, std::size_t j) { return sax_distance(spec.distance, strings[i], strings[j], spec.bins); },
        threads);
}

}  // namespace dlpbench
