#include "dlpbench/core/normalize.hpp"

#include <algorithm>
#include <cmath>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

std::vector<double> minmax_values(std::span<const double> y) {
    if (y.size() < 2) throw InvariantViolation("min-max normalisation needs at least 2 samples");
    for (double v : y) {
        if (!std::isfinite(v)) throw InvariantViolation("min-max normalisation of a non-finite sample");
    }
    const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (hi == lo) throw ConstantSeries("all samples equal " + std::to_string(lo));
    const double range = hi - lo;
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        // The extremes are pinned so rounding in the division cannot move them.
        if (y[i] == lo) {
            out[i] = 0.0;
        } else if (y[i] == hi) {
            out[i] = 1.0;
        } else {
            out[i] = std::clamp((y[i] - lo) / range, 0.0, 1.0);
        }
    }
    return out;
}

TimeSeries minmax_normalize(std::span<const double> y) { return TimeSeries(minmax_values(y)); }

std::vector<double> z_normalize(std::span<const double> x) {
    if (x.empty()) throw EmptyInput("z-normalisation of an empty series");
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(x.size()));
    if (!(sd > 0.0)) throw ZeroVariance("z-normalisation of a constant series");
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - mean) / sd;
    return out;
}

}  // namespace dlpbench
