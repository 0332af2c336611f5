#include "dlpbench/clustering/kmeans.hpp"

#include <algorithm>
#include <limits>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/parallel.hpp"

namespace dlpbench {

namespace {

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const double diff = a[t] - b[t];
        s += diff * diff;
    }
    return s;
}

std::vector<std::vector<double>> seed_plus_plus(std::span<const std::vector<double>> x, std::size_t k, Rng& rng) {
    const std::size_t n = x.size();
    std::vector<std::vector<double>> centers;
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    auto pick = [&](std::size_t c) {
        centers.push_back(x[c]);
        for (std::size_t i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], sq_dist(x[i], x[c]));
    };
    pick(static_cast<std::size_t>(rng.discrete_uniform(0, static_cast<std::int64_t>(n) - 1)));
    while (centers.size() < k) {
        double total = 0.0;
        for (double v : nearest) total += v;
        std::size_t next = n;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < n && next == n; ++i) {
                acc += nearest[i];
                if (acc > target && nearest[i] > 0.0) next = i;
            }
            for (std::size_t i = n; next == n && i-- > 0;) {
                if (nearest[i] > 0.0) next = i;
            }
        } else {
            next = static_cast<std::size_t>(rng.discrete_uniform(0, static_cast<std::int64_t>(n) - 1));
        }
        pick(next);
    }
    return centers;
}

/// Nearest-centre labels (smallest index on ties); empty clusters take the
/// point farthest from its centre among clusters with more than one member,
/// and their centre moves onto that point.
double assign(std::span<const std::vector<double>> x, std::vector<std::vector<double>>& centers,
              std::vector<int>& labels, std::vector<double>& dist) {
    const std::size_t n = x.size();
    const std::size_t k = centers.size();
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const double v = sq_dist(x[i], centers[c]);
            if (v < best) {
                best = v;
                arg = static_cast<int>(c);
            }
        }
        labels[i] = arg;
        dist[i] = best;
        ++counts[static_cast<std::size_t>(arg)];
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] > 0) continue;
        std::size_t far = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (counts[static_cast<std::size_t>(labels[i])] < 2) continue;
            if (far == n || dist[i] > dist[far]) far = i;
        }
        --counts[static_cast<std::size_t>(labels[far])];
        labels[far] = static_cast<int>(c);
        dist[far] = 0.0;
        centers[c] = x[far];
        counts[c] = 1;
    }
    double inertia = 0.0;
    for (double v : dist) inertia += v;
    return inertia;
}

std::vector<std::vector<double>> means(std::span<const std::vector<double>> x, const std::vector<int>& labels,
                                       std::size_t k) {
    const std::size_t dim = x[0].size();
    std::vector<std::vector<double>> c(k, std::vector<double>(dim, 0.0));
    std::vector<double> counts(k, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto& row = c[static_cast<std::size_t>(labels[i])];
        for (std::size_t t = 0; t < dim; ++t) row[t] += x[i][t];
        counts[static_cast<std::size_t>(labels[i])] += 1.0;
    }
    for (std::size_t j = 0; j < k; ++j)
        for (auto& v : c[j]) v /= counts[j];
    return c;
}

KMeansResult run_lloyd(std::span<const std::vector<double>> x, std::size_t k, Rng rng, int max_iter, double tol) {
    const std::size_t n = x.size();
    KMeansResult out;
    out.centers = seed_plus_plus(x, k, rng);
    std::vector<int> labels(n);
    std::vector<double> dist(n);
    for (int iter = 0; iter < max_iter; ++iter) {
        out.trace.push_back(assign(x, out.centers, labels, dist));
        auto next = means(x, labels, k);
        double shift = 0.0;
        for (std::size_t c = 0; c < k; ++c) shift += sq_dist(next[c], out.centers[c]);
        out.centers = std::move(next);
        out.iterations = iter + 1;
        if (shift <= tol) break;
    }
    out.inertia = assign(x, out.centers, labels, dist);
    out.trace.push_back(out.inertia);
    out.partition = make_partition(labels, static_cast<int>(k));
    return out;
}

}  // namespace

KMeansResult kmeans(std::span<const std::vector<double>> x, int k, const Rng& rng, int n_init, int max_iter,
                    double tol, unsigned threads) {
    const std::size_t n = x.size();
    if (n == 0) throw EmptyInput("kmeans on no vectors");
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw InvalidParameter("kmeans: k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
    for (const auto& row : x) {
        if (row.size() != x[0].size()) throw LengthMismatch("kmeans vectors differ in dimension");
    }
    if (n_init < 1) throw InvalidParameter("kmeans: n_init must be >= 1");
    std::vector<KMeansResult> runs(static_cast<std::size_t>(n_init));
    parallel_for(runs.size(), threads, [&](std::size_t r) {
        runs[r] = run_lloyd(x, static_cast<std::size_t>(k), rng.split(r), max_iter, tol);
    });
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].inertia < runs[best].inertia) best = r;
    }
    return runs[best];
}

}  // namespace dlpbench
