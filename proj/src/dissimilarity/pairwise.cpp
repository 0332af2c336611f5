#include "dlpbench/dissimilarity/pairwise.hpp"

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/parallel.hpp"
#include "dlpbench/dissimilarity/elastic.hpp"
#include "dlpbench/dissimilarity/sliding.hpp"

namespace dlpbench {

MeasureContext MeasureContext::for_measure(const MeasureSpec& spec, std::span<const TimeSeries> series) {
    MeasureContext ctx;
    if (spec.kind == Measure::MAH) ctx.mahalanobis = MahalanobisContext::fit(series);
    return ctx;
}

double distance(const MeasureSpec& spec, Series x, Series y, const MeasureContext* ctx) {
    switch (spec.kind) {
        case Measure::ED: return euclidean(x, y);
        case Measure::MD: return manhattan(x, y);
        case Measure::ChD: return chebyshev(x, y);
        case Measure::MM: return minkowski(x, y, spec.p);
        case Measure::BD: return bray_curtis(x, y);
        case Measure::CaD: return canberra(x, y);
        case Measure::CoD: return cosine_distance(x, y);
        case Measure::PC: return pearson_distance(x, y);
        case Measure::SC: return spearman_distance(x, y);
        case Measure::KT: return kendall_distance(x, y);
        case Measure::CID: return cid(x, y);
        case Measure::HD: return hausdorff(x, y);
        case Measure::MAH:
            if (!ctx || !ctx->mahalanobis) throw MissingContext("mah requires a dataset covariance");
            return ctx->mahalanobis->distance(x, y);
        case Measure::DTW: return dtw(x, y, spec.w);
        case Measure::ERP: return erp(x, y, spec.w, spec.g);
        case Measure::ERS: return ers(x, y, spec.w, spec.epsilon ? *spec.epsilon : ers_auto_epsilon(x, y));
        case Measure::LCSS: return lcss(x, y, spec.w, spec.epsilon ? *spec.epsilon : ers_auto_epsilon(x, y));
        case Measure::MSM: return msm(x, y, spec.w, spec.c);
        case Measure::TWED: return twed(x, y, spec.nu, spec.lambda);
        case Measure::KSD: return ksd(x, y, spec.w);
        case Measure::FD: return fd(x, y);
        case Measure::SBD: return sbd(x, y);
        case Measure::MPD: return mpd(x, y, spec.w, spec.tau);
    }
    throw InvalidParameter("unhandled measure");
}

DissimilarityMatrix build_matrix(std::size_t n, const std::function<double(std::size_t, std::size_t)>& fn,
                                 unsigned threads) {
    DissimilarityMatrix d(n);
    // Rows write disjoint entries, so concurrent set() calls never collide.
    parallel_for(n, threads, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = 0.0;
            try {
                v = fn(i, j);
                d.set(i, j, v);
            } catch (const PairFailure&) {
                throw;
            } catch (const std::exception& e) {
                throw PairFailure(i, j, e.what());
            }
        }
    });
    return d;
}

DissimilarityMatrix pairwise_matrix(const MeasureSpec& spec, std::span<const TimeSeries> series, unsigned threads) {
    spec.validate();
    const MeasureContext ctx = MeasureContext::for_measure(spec, series);
    return build_matrix(
        series.size(),
        [&](std::size_t i, std::size_t j) { return distance(spec, series[i].values(), series[j].values(), &ctx); },
        threads);
}

DissimilarityMatrix pairwise_matrix(const MeasureSpec& spec, const LabeledDataset& data, unsigned threads) {
    return pairwise_matrix(spec, std::span<const TimeSeries>(data.series), threads);
}

DissimilarityMatrix euclidean_matrix(std::span<const FeatureVector> features, unsigned threads) {
    return build_matrix(
        features.size(),
        [&](std::size_t i, std::size_t j) { return euclidean(features[i].values, features[j].values); }, threads);
}

}  // namespace dlpbench
