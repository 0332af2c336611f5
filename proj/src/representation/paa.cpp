#include "dlpbench/representation/paa.hpp"

#include <numeric>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

FeatureVector paa(std::span<const double> x, int w) {
    if (w < 1 || w > 24) throw InvalidParameter("paa window " + std::to_string(w) + " outside [1, 24]");
    FeatureVector out;
    const auto step = static_cast<std::size_t>(w);
    for (std::size_t begin = 0; begin < x.size(); begin += step) {
        const std::size_t end = std::min(begin + step, x.size());
        const double sum = std::accumulate(x.begin() + static_cast<std::ptrdiff_t>(begin),
                                           x.begin() + static_cast<std::ptrdiff_t>(end), 0.0);
        out.values.push_back(sum / static_cast<double>(end - begin));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> segment_bounds(std::size_t n, std::size_t segments) {
    if (segments < 1 || segments > n) {
        throw InvalidParameter("cannot split " + std::to_string(n) + " samples into " + std::to_string(segments) +
                               " segments");
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < segments; ++i) out.emplace_back(i * n / segments, (i + 1) * n / segments);
    return out;
}

}  // namespace dlpbench
