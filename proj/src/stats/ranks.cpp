#include "dlpbench/stats/ranks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

ScoreTable rank_table(const ScoreTable& scores) {
    if (scores.empty() || scores.front().empty()) throw EmptyInput("rank table of an empty score table");
    const std::size_t k = scores.size();
    const std::size_t n = scores.front().size();
    for (std::size_t m = 0; m < k; ++m) {
        if (scores[m].size() != n) throw MissingCells("method " + std::to_string(m) + " has a ragged row");
        for (std::size_t d = 0; d < n; ++d) {
            if (std::isnan(scores[m][d])) {
                throw MissingCells("method " + std::to_string(m) + ", dataset " + std::to_string(d));
            }
        }
    }
    ScoreTable ranks(k, std::vector<double>(n, 0.0));
    std::vector<std::size_t> order(k);
    for (std::size_t d = 0; d < n; ++d) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return scores[a][d] > scores[b][d]; });
        std::size_t i = 0;
        while (i < k) {
            std::size_t j = i;
            while (j + 1 < k && scores[order[j + 1]][d] == scores[order[i]][d]) ++j;
            const double r = (static_cast<double>(i + j) / 2.0) + 1.0;
            for (std::size_t t = i; t <= j; ++t) ranks[order[t]][d] = r;
            i = j + 1;
        }
    }
    return ranks;
}

std::vector<double> mean_ranks(const ScoreTable& scores) {
    const auto ranks = rank_table(scores);
    std::vector<double> out;
    out.reserve(ranks.size());
    for (const auto& row : ranks) {
        out.push_back(std::accumulate(row.begin(), row.end(), 0.0) / static_cast<double>(row.size()));
    }
    return out;
}

}  // namespace dlpbench
