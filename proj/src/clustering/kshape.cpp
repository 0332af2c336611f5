#include "dlpbench/clustering/kshape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/normalize.hpp"
#include "dlpbench/core/parallel.hpp"
#include "dlpbench/dissimilarity/sliding.hpp"

namespace dlpbench {

namespace {

/// y shifted by s with zero padding: out[t + s] = y[t].
std::vector<double> shifted(std::span<const double> y, int s) {
    const auto n = static_cast<std::ptrdiff_t>(y.size());
    std::vector<double> out(y.size(), 0.0);
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        const std::ptrdiff_t u = t + s;
        if (u >= 0 && u < n) out[static_cast<std::size_t>(u)] = y[static_cast<std::size_t>(t)];
    }
    return out;
}

bool all_zero(std::span<const double> x) {
    for (double v : x) {
        if (v != 0.0) return false;
    }
    return true;
}

struct Run {
    std::vector<int> labels;
    std::vector<std::vector<double>> centroids;
    double cost = std::numeric_limits<double>::infinity();
    std::vector<double> trace;
};

/// Nearest centroid by SBD (smallest index on ties); returns the total.
double assign(const std::vector<std::vector<double>>& x, const std::vector<std::vector<double>>& centroids,
              std::vector<int>& labels, std::vector<double>& dist) {
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        int arg = 0;
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            const double v = sbd(centroids[c], x[i]);
            if (v < best) {
                best = v;
                arg = static_cast<int>(c);
            }
        }
        labels[i] = arg;
        dist[i] = best;
        total += best;
    }
    return total;
}

/// Moves a random member of a cluster with at least two members into each
/// empty cluster; that cluster's centroid becomes the moved series.
void repair_empty(const std::vector<std::vector<double>>& x, std::size_t k, std::vector<int>& labels,
                  std::vector<std::vector<double>>* centroids, Rng& rng) {
    std::vector<std::size_t> counts(k, 0);
    for (int l : labels) ++counts[static_cast<std::size_t>(l)];
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] > 0) continue;
        std::vector<std::size_t> donors;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (counts[static_cast<std::size_t>(labels[i])] > 1) donors.push_back(i);
        }
        const auto p = donors[static_cast<std::size_t>(rng.discrete_uniform(0, static_cast<std::int64_t>(donors.size()) - 1))];
        --counts[static_cast<std::size_t>(labels[p])];
        labels[p] = static_cast<int>(c);
        counts[c] = 1;
        if (centroids) (*centroids)[c] = x[p];
    }
}

std::vector<std::vector<double>> members_of(const std::vector<std::vector<double>>& x, const std::vector<int>& labels,
                                            int c) {
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (labels[i] == c) out.push_back(x[i]);
    }
    return out;
}

Run run_kshape(const std::vector<std::vector<double>>& x, std::size_t k, Rng rng, int max_iter, double tol) {
    const std::size_t n = x.size();
    Run run;
    // Seeds are k distinct series drawn at random.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t c = 0; c < k; ++c) run.centroids.push_back(x[order[c]]);
    run.labels.resize(n);
    std::vector<double> first(n);
    assign(x, run.centroids, run.labels, first);
    repair_empty(x, k, run.labels, &run.centroids, rng);
    // The seeding cost is not a baseline: the first extraction is always kept.
    run.cost = std::numeric_limits<double>::infinity();

    std::vector<int> labels(n);
    std::vector<double> dist(n);
    for (int iter = 0; iter < max_iter; ++iter) {
        auto centroids = run.centroids;
        for (std::size_t c = 0; c < k; ++c) {
            centroids[c] = shape_extraction(members_of(x, run.labels, static_cast<int>(c)), run.centroids[c]);
        }
        double cost = assign(x, centroids, labels, dist);
        std::vector<std::size_t> counts(k, 0);
        for (int l : labels) ++counts[static_cast<std::size_t>(l)];
        if (std::find(counts.begin(), counts.end(), 0) != counts.end()) {
            repair_empty(x, k, labels, &centroids, rng);
            cost = 0.0;
            for (std::size_t i = 0; i < n; ++i) cost += sbd(centroids[static_cast<std::size_t>(labels[i])], x[i]);
        }
        if (cost > run.cost) break;  // keep the previous, cheaper state
        const bool unchanged = labels == run.labels;
        const double gain = run.cost - cost;
        run.labels = labels;
        run.centroids = std::move(centroids);
        run.cost = cost;
        run.trace.push_back(cost);
        if (unchanged || gain < tol) break;
    }
    return run;
}

}  // namespace

std::vector<double> shape_extraction(std::span<const std::vector<double>> members, std::span<const double> reference) {
    if (members.empty()) throw EmptyInput("shape extraction of an empty cluster");
    const std::size_t len = members[0].size();
    const auto m = static_cast<Eigen::Index>(len);
    const bool skip_alignment = all_zero(reference);
    Eigen::MatrixXd aligned(static_cast<Eigen::Index>(members.size()), m);
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::vector<double> row = members[i];
        if (!skip_alignment && !all_zero(members[i])) {
            int s = 0;
            sbd(reference, members[i], s);
            row = shifted(members[i], s);
        }
        for (std::size_t t = 0; t < len; ++t) aligned(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t)) = row[t];
    }
    const Eigen::MatrixXd s = aligned.transpose() * aligned;
    const Eigen::MatrixXd q =
        Eigen::MatrixXd::Identity(m, m) - Eigen::MatrixXd::Constant(m, m, 1.0 / static_cast<double>(len));
    const Eigen::MatrixXd mm = q.transpose() * s * q;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mm);
    if (solver.info() != Eigen::Success) throw EigenFailure("shape extraction eigen-decomposition failed");
    Eigen::VectorXd c = solver.eigenvectors().col(m - 1);
    double plus = 0.0, minus = 0.0;
    for (Eigen::Index i = 0; i < aligned.rows(); ++i) {
        plus += (aligned.row(i).transpose() - c).norm();
        minus += (aligned.row(i).transpose() + c).norm();
    }
    if (minus < plus) c = -c;
    std::vector<double> out(c.data(), c.data() + m);
    try {
        return z_normalize(out);
    } catch (const ZeroVariance&) {
        return std::vector<double>(len, 0.0);
    }
}

KShapeResult kshape(std::span<const TimeSeries> series, int k, const Rng& rng, int n_init, int max_iter, double tol,
                    unsigned threads) {
    const std::size_t n = series.size();
    if (n == 0) throw EmptyInput("kshape on no series");
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw InvalidParameter("kshape: k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
    if (n_init < 1) throw InvalidParameter("kshape: n_init must be >= 1");
    std::vector<std::vector<double>> x;
    x.reserve(n);
    for (const auto& s : series) x.emplace_back(s.values().begin(), s.values().end());
    std::vector<Run> runs(static_cast<std::size_t>(n_init));
    parallel_for(runs.size(), threads, [&](std::size_t r) {
        runs[r] = run_kshape(x, static_cast<std::size_t>(k), rng.split(r), max_iter, tol);
    });
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].cost < runs[best].cost) best = r;
    }
    KShapeResult out;
    out.partition = make_partition(runs[best].labels, k);
    out.centroids = std::move(runs[best].centroids);
    out.cost = runs[best].cost;
    out.trace = std::move(runs[best].trace);
    return out;
}

}  // namespace dlpbench
