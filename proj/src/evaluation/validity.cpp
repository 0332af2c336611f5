#include "dlpbench/evaluation/validity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

void check_inputs(std::span<const int> p, std::span<const int> g) {
    if (p.size() != g.size()) {
        throw LengthMismatch(std::to_string(p.size()) + " vs " + std::to_string(g.size()));
    }
    if (p.empty()) throw EmptyInput("validity index of empty labelings");
}

std::vector<int> dense(std::span<const int> labels, std::size_t& k) {
    std::map<int, int> ids;
    for (int l : labels) ids.emplace(l, 0);
    int next = 0;
    for (auto& [l, id] : ids) id = next++;
    k = ids.size();
    std::vector<int> out;
    out.reserve(labels.size());
    for (int l : labels) out.push_back(ids[l]);
    return out;
}

double choose2(double v) { return v * (v - 1.0) / 2.0; }

double entropy(const std::vector<double>& sums, double n) {
    double h = 0.0;
    for (double s : sums) {
        if (s > 0) h -= (s / n) * std::log(s / n);
    }
    return h;
}

// Expected mutual information under the hypergeometric model.
double expected_mi(const Contingency& c) {
    const auto n = static_cast<int>(c.total);
    std::vector<double> log_fact(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 2; i <= n; ++i) log_fact[static_cast<std::size_t>(i)] = log_fact[static_cast<std::size_t>(i) - 1] + std::log(i);
    auto lf = [&](int v) { return log_fact[static_cast<std::size_t>(v)]; };
    const double N = c.total;
    double emi = 0.0;
    for (double ad : c.row_sums) {
        const int a = static_cast<int>(ad);
        for (double bd : c.col_sums) {
            const int b = static_cast<int>(bd);
            const double fixed = lf(a) + lf(b) + lf(n - a) + lf(n - b) - lf(n);
            for (int nij = std::max(1, a + b - n); nij <= std::min(a, b); ++nij) {
                const double term = (nij / N) * std::log(N * nij / (ad * bd));
                const double log_p = fixed - lf(nij) - lf(a - nij) - lf(b - nij) - lf(n - a - b + nij);
                emi += term * std::exp(log_p);
            }
        }
    }
    return emi;
}

}  // namespace

Contingency Contingency::build(std::span<const int> a, std::span<const int> b) {
    check_inputs(a, b);
    std::size_t ka = 0, kb = 0;
    const auto da = dense(a, ka);
    const auto db = dense(b, kb);
    Contingency c;
    c.counts.assign(ka, std::vector<double>(kb, 0.0));
    c.row_sums.assign(ka, 0.0);
    c.col_sums.assign(kb, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto r = static_cast<std::size_t>(da[i]);
        const auto s = static_cast<std::size_t>(db[i]);
        c.counts[r][s] += 1.0;
        c.row_sums[r] += 1.0;
        c.col_sums[s] += 1.0;
    }
    c.total = static_cast<double>(a.size());
    return c;
}

double ari(std::span<const int> p, std::span<const int> g) {
    const auto c = Contingency::build(p, g);
    // Pair-confusion counts: tp pairs together in both, fn together only in
    // p, fp together only in g, tn apart in both.
    double sum_sq = 0.0;
    for (const auto& row : c.counts) {
        for (double v : row) sum_sq += choose2(v);
    }
    double rows = 0.0, cols = 0.0;
    for (double v : c.row_sums) rows += choose2(v);
    for (double v : c.col_sums) cols += choose2(v);
    const double tp = sum_sq;
    const double fn = rows - sum_sq;
    const double fp = cols - sum_sq;
    const double tn = choose2(c.total) - tp - fn - fp;
    if (fn == 0.0 && fp == 0.0) return 1.0;
    return 2.0 * (tp * tn - fn * fp) / ((tp + fn) * (fn + tn) + (tp + fp) * (fp + tn));
}

double ami(std::span<const int> p, std::span<const int> g) {
    const auto c = Contingency::build(p, g);
    const std::size_t kp = c.row_sums.size(), kg = c.col_sums.size();
    if ((kp == 1 && kg == 1) || (kp == c.total && kg == c.total)) return 1.0;
    const double n = c.total;
    double mi = 0.0;
    for (std::size_t i = 0; i < kp; ++i) {
        for (std::size_t j = 0; j < kg; ++j) {
            const double v = c.counts[i][j];
            if (v > 0) mi += (v / n) * std::log(n * v / (c.row_sums[i] * c.col_sums[j]));
        }
    }
    const double emi = expected_mi(c);
    const double norm = 0.5 * (entropy(c.row_sums, n) + entropy(c.col_sums, n));
    double den = norm - emi;
    const double eps = std::numeric_limits<double>::epsilon();
    den = den < 0 ? std::min(den, -eps) : std::max(den, eps);
    return (mi - emi) / den;
}

double one_minus_nvd(std::span<const int> p, std::span<const int> g) {
    const auto c = Contingency::build(p, g);
    double row_max = 0.0, col_max = 0.0;
    for (const auto& row : c.counts) row_max += *std::max_element(row.begin(), row.end());
    for (std::size_t j = 0; j < c.col_sums.size(); ++j) {
        double m = 0.0;
        for (const auto& row : c.counts) m = std::max(m, row[j]);
        col_max += m;
    }
    const double nvd = (2.0 * c.total - row_max - col_max) / (2.0 * c.total);
    return 1.0 - nvd;
}

double psi(std::span<const int> p, std::span<const int> g) {
    const auto c = Contingency::build(p, g);
    const std::size_t kp = c.row_sums.size(), kg = c.col_sums.size();
    if (kp == 1 && kg == 1) return 1.0;
    std::vector<std::vector<double>> sim(kp, std::vector<double>(kg, 0.0));
    for (std::size_t i = 0; i < kp; ++i) {
        for (std::size_t j = 0; j < kg; ++j) sim[i][j] = c.counts[i][j] / std::max(c.row_sums[i], c.col_sums[j]);
    }
    const auto match = hungarian_max(sim);
    double s = 0.0;
    for (std::size_t i = 0; i < kp; ++i) {
        if (match[i] >= 0) s += sim[i][static_cast<std::size_t>(match[i])];
    }
    auto a = c.row_sums;
    auto b = c.col_sums;
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    double e = 0.0;
    for (std::size_t i = 0; i < std::min(kp, kg); ++i) e += (a[i] * b[i] / c.total) / std::max(a[i], b[i]);
    const double k = static_cast<double>(std::max(kp, kg));
    if (s < e) return 0.0;
    return std::min(1.0, (s - e) / (k - e));
}

std::pair<std::vector<int>, std::vector<int>> filter_outliers(std::span<const int> truth,
                                                              std::span<const int> assigned) {
    if (truth.size() != assigned.size()) throw LengthMismatch("filter_outliers inputs differ in length");
    std::pair<std::vector<int>, std::vector<int>> out;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] == -1) continue;
        out.first.push_back(truth[i]);
        out.second.push_back(assigned[i]);
    }
    return out;
}

std::vector<int> hungarian_max(const std::vector<std::vector<double>>& weights) {
    const std::size_t rows = weights.size();
    if (rows == 0) return {};
    const std::size_t cols = weights.front().size();
    const bool transpose = rows > cols;
    const std::size_t n = transpose ? cols : rows;  // n <= m
    const std::size_t m = transpose ? rows : cols;
    auto cost = [&](std::size_t i, std::size_t j) { return transpose ? -weights[j][i] : -weights[i][j]; };

    // Shortest augmenting path with potentials (1-based internally).
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        owner[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(m + 1, inf);
        std::vector<bool> used(m + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = owner[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (owner[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> match(rows, -1);
    for (std::size_t j = 1; j <= m; ++j) {
        if (owner[j] == 0) continue;
        if (transpose) {
            match[j - 1] = static_cast<int>(owner[j] - 1);
        } else {
            match[owner[j] - 1] = static_cast<int>(j - 1);
        }
    }
    return match;
}

}  // namespace dlpbench
