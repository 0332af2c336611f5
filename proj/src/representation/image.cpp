#include "dlpbench/representation/image.hpp"

#include <algorithm>
#include <cmath>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/representation/paa.hpp"

namespace dlpbench {

namespace {

void check_size(std::size_t n_i, std::size_t n) {
    if (n_i < 2 || n_i > n) {
        throw InvalidParameter("image size " + std::to_string(n_i) + " outside [2, " + std::to_string(n) + "]");
    }
}

}  // namespace

std::string gaf_type_name(GafType t) { return t == GafType::Summation ? "summation" : "difference"; }

GafType parse_gaf_type(const std::string& name) {
    if (name == "summation") return GafType::Summation;
    if (name == "difference") return GafType::Difference;
    throw ParseError("unknown GAF type '" + name + "'");
}

std::vector<double> average_pool(std::span<const double> image, std::size_t n, std::size_t n_i) {
    if (image.size() != n * n) throw LengthMismatch("image is not n x n");
    const auto bounds = segment_bounds(n, n_i);
    std::vector<double> out(n_i * n_i, 0.0);
    for (std::size_t r = 0; r < n_i; ++r) {
        for (std::size_t c = 0; c < n_i; ++c) {
            double sum = 0.0;
            for (std::size_t i = bounds[r].first; i < bounds[r].second; ++i) {
                for (std::size_t j = bounds[c].first; j < bounds[c].second; ++j) sum += image[i * n + j];
            }
            const double cells = static_cast<double>((bounds[r].second - bounds[r].first) *
                                                     (bounds[c].second - bounds[c].first));
            out[r * n_i + c] = sum / cells;
        }
    }
    return out;
}

FeatureVector gaf(std::span<const double> x, std::size_t n_i, GafType type) {
    const std::size_t n = x.size();
    check_size(n_i, n);
    const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    std::vector<double> c(n), s(n);
    for (std::size_t t = 0; t < n; ++t) {
        const double scaled = hi > lo ? std::clamp((2.0 * x[t] - hi - lo) / (hi - lo), -1.0, 1.0) : 1.0;
        c[t] = scaled;
        s[t] = std::sqrt(std::max(0.0, 1.0 - scaled * scaled));
    }
    std::vector<double> image(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            image[i * n + j] = type == GafType::Summation ? c[i] * c[j] - s[i] * s[j] : s[i] * c[j] - c[i] * s[j];
        }
    }
    return FeatureVector{n_i == n ? image : average_pool(image, n, n_i)};
}

std::vector<double> markov_transition_matrix(std::span<const int> symbols, int n_b) {
    const auto b = static_cast<std::size_t>(n_b);
    std::vector<double> w(b * b, 0.0);
    for (std::size_t t = 1; t < symbols.size(); ++t) {
        w[static_cast<std::size_t>(symbols[t - 1]) * b + static_cast<std::size_t>(symbols[t])] += 1.0;
    }
    for (std::size_t r = 0; r < b; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < b; ++c) sum += w[r * b + c];
        if (sum > 0.0) {
            for (std::size_t c = 0; c < b; ++c) w[r * b + c] /= sum;
        }
    }
    return w;
}

FeatureVector mtf(std::span<const double> x, std::size_t n_i, int n_b, BinStrategy strategy) {
    const std::size_t n = x.size();
    check_size(n_i, n);
    const auto q = digitize(strategy, n_b, x);
    const auto w = markov_transition_matrix(q, n_b);
    const auto b = static_cast<std::size_t>(n_b);
    std::vector<double> image(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            image[i * n + j] = w[static_cast<std::size_t>(q[i]) * b + static_cast<std::size_t>(q[j])];
        }
    }
    return FeatureVector{n_i == n ? image : average_pool(image, n, n_i)};
}

}  // namespace dlpbench
