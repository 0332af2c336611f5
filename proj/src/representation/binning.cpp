#include "dlpbench/representation/binning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

std::string bin_strategy_name(BinStrategy s) {
    switch (s) {
        case BinStrategy::Quantile: return "quantile";
        case BinStrategy::Uniform: return "uniform";
        case BinStrategy::Normal: return "normal";
    }
    return "?";
}

BinStrategy parse_bin_strategy(const std::string& name) {
    for (auto s : {BinStrategy::Quantile, BinStrategy::Uniform, BinStrategy::Normal}) {
        if (bin_strategy_name(s) == name) return s;
    }
    throw ParseError("unknown bin strategy '" + name + "'");
}

std::vector<double> gaussian_breakpoints(int n_b) {
    if (n_b < 2 || n_b > 26) throw InvalidParameter("bin count " + std::to_string(n_b) + " outside [2, 26]");
    const boost::math::normal_distribution<double> z;
    std::vector<double> out;
    for (int i = 1; i < n_b; ++i) out.push_back(boost::math::quantile(z, static_cast<double>(i) / n_b));
    return out;
}

std::vector<double> bin_edges(BinStrategy strategy, int n_b, std::span<const double> x) {
    if (n_b < 2 || n_b > 26) throw InvalidParameter("bin count " + std::to_string(n_b) + " outside [2, 26]");
    if (x.empty()) throw EmptyInput("cannot bin an empty series");
    std::vector<double> edges;
    switch (strategy) {
        case BinStrategy::Quantile: {
            std::vector<double> sorted(x.begin(), x.end());
            std::sort(sorted.begin(), sorted.end());
            const double last = static_cast<double>(sorted.size() - 1);
            for (int i = 1; i < n_b; ++i) {
                const double pos = last * i / n_b;
                const auto lo = static_cast<std::size_t>(std::floor(pos));
                const auto hi = std::min(lo + 1, sorted.size() - 1);
                edges.push_back(sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]));
            }
            break;
        }
        case BinStrategy::Uniform: {
            const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
            for (int i = 1; i < n_b; ++i) edges.push_back(*lo + (*hi - *lo) * i / n_b);
            break;
        }
        case BinStrategy::Normal: {
            const double n = static_cast<double>(x.size());
            const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
            double ss = 0.0;
            for (double v : x) ss += (v - mean) * (v - mean);
            const double sd = std::sqrt(ss / n);
            for (double b : gaussian_breakpoints(n_b)) edges.push_back(mean + sd * b);
            break;
        }
    }
    return edges;
}

std::vector<int> digitize(BinStrategy strategy, int n_b, std::span<const double> x) {
    const auto edges = bin_edges(strategy, n_b, x);
    std::vector<int> out(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        out[t] = static_cast<int>(std::upper_bound(edges.begin(), edges.end(), x[t]) - edges.begin());
    }
    return out;
}

}  // namespace dlpbench
