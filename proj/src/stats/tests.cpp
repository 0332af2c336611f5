#include "dlpbench/stats/tests.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

// Average ranks (1-based) of the absolute values; also returns sum(t^3 - t).
std::vector<double> abs_ranks(const std::vector<double>& d, double& tie_term) {
    const std::size_t n = d.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::abs(d[a]) < std::abs(d[b]); });
    std::vector<double> ranks(n);
    tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && std::abs(d[order[j + 1]]) == std::abs(d[order[i]])) ++j;
        const double r = static_cast<double>(i + j) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = r;
        const auto t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

TestResult friedman(const ScoreTable& scores) {
    const auto ranks = rank_table(scores);
    const auto k = static_cast<double>(ranks.size());
    const auto n = static_cast<double>(ranks.front().size());
    if (ranks.size() < 2 || ranks.front().size() < 2) {
        throw InvalidParameter("Friedman test needs at least 2 methods and 2 datasets");
    }
    double ss = 0.0;
    for (const auto& row : ranks) {
        double r = 0.0;
        for (double v : row) r += v;
        ss += r * r;
    }
    double ties = 0.0;
    for (std::size_t d = 0; d < ranks.front().size(); ++d) {
        std::vector<double> col;
        for (const auto& row : ranks) col.push_back(row[d]);
        std::sort(col.begin(), col.end());
        std::size_t i = 0;
        while (i < col.size()) {
            std::size_t j = i;
            while (j + 1 < col.size() && col[j + 1] == col[i]) ++j;
            const auto t = static_cast<double>(j - i + 1);
            ties += t * t * t - t;
            i = j + 1;
        }
    }
    const double correction = 1.0 - ties / (k * (k * k - 1.0) * n);
    if (correction <= 0.0) return {0.0, 1.0};
    double stat = (12.0 / (k * n * (k + 1.0)) * ss - 3.0 * n * (k + 1.0)) / correction;
    stat = std::max(stat, 0.0);
    const boost::math::chi_squared dist(k - 1.0);
    return {stat, boost::math::cdf(boost::math::complement(dist, stat))};
}

TestResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b, WilcoxonMethod method) {
    if (a.size() != b.size()) throw LengthMismatch("Wilcoxon samples differ in length");
    std::vector<double> d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) d.push_back(a[i] - b[i]);
    }
    if (d.empty()) return {0.0, 1.0};
    if (d.size() < 5) throw TooFewPairs(std::to_string(d.size()) + " non-zero differences, need 5");
    const std::size_t n = d.size();
    double tie_term = 0.0;
    const auto ranks = abs_ranks(d, tie_term);
    double w_plus = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] > 0) w_plus += ranks[i];
    }
    const double total = static_cast<double>(n * (n + 1)) / 2.0;
    const double stat = std::min(w_plus, total - w_plus);

    const bool exact = method == WilcoxonMethod::Exact || (method == WilcoxonMethod::Auto && n <= 15);
    if (exact) {
        if (n > 30) throw InvalidParameter("exact Wilcoxon limited to 30 pairs");
        // Doubled ranks are integers, so the null distribution of 2 W+ is a
        // subset-sum count over the 2^n sign patterns.
        std::vector<int> twice(n);
        int max_sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            twice[i] = static_cast<int>(std::lround(2.0 * ranks[i]));
            max_sum += twice[i];
        }
        std::vector<double> count(static_cast<std::size_t>(max_sum) + 1, 0.0);
        count[0] = 1.0;
        int reach = 0;
        for (int r : twice) {
            for (int s = reach; s >= 0; --s) count[static_cast<std::size_t>(s + r)] += count[static_cast<std::size_t>(s)];
            reach += r;
        }
        const int observed = static_cast<int>(std::lround(2.0 * w_plus));
        double lower = 0.0, upper = 0.0, all = 0.0;
        for (int s = 0; s <= max_sum; ++s) {
            const double c = count[static_cast<std::size_t>(s)];
            all += c;
            if (s <= observed) lower += c;
            if (s >= observed) upper += c;
        }
        return {stat, std::min(1.0, 2.0 * std::min(lower, upper) / all)};
    }
    const double nn = static_cast<double>(n);
    const double mean = nn * (nn + 1.0) / 4.0;
    const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
    if (!(var > 0.0)) return {stat, 1.0};
    const double diff = w_plus - mean;
    const double corrected = diff == 0.0 ? 0.0 : (std::abs(diff) - 0.5);
    const double z = std::max(corrected, 0.0) / std::sqrt(var);
    const boost::math::normal normal;
    return {stat, std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(normal, z)))};
}

std::vector<double> bonferroni(std::span<const double> pvals, double m) {
    std::vector<double> out;
    out.reserve(pvals.size());
    for (double p : pvals) out.push_back(std::min(1.0, p * m));
    return out;
}

std::vector<std::vector<bool>> nonsignificance_graph(const ScoreTable& scores, double alpha) {
    const std::size_t k = scores.size();
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, true));
    const double m = static_cast<double>(k * (k - 1)) / 2.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            double p = 1.0;
            try {
                p = wilcoxon_signed_rank(scores[i], scores[j]).p;
            } catch (const TooFewPairs&) {
                p = 1.0;
            }
            const bool same = std::min(1.0, p * m) >= alpha;
            adj[i][j] = same;
            adj[j][i] = same;
        }
    }
    return adj;
}

}  // namespace dlpbench
