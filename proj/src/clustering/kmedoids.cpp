#include "dlpbench/clustering/kmedoids.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/parallel.hpp"

namespace dlpbench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Row-major copy of the matrix; SWAP scans whole rows, so contiguous
/// storage matters more than the halved footprint of the condensed form.
struct Full {
    std::vector<double> v;
    std::size_t n = 0;

    explicit Full(const DissimilarityMatrix& d) : v(d.to_full()), n(d.size()) {}
    double operator()(std::size_t i, std::size_t j) const { return v[i * n + j]; }
    std::size_t size() const { return n; }
};

/// Nearest and second-nearest medoid (by position in `medoids`) of every object.
struct Assignment {
    std::vector<std::size_t> near;
    std::vector<double> dn, ds;
    double cost = 0.0;
};

Assignment assign(const Full& d, const std::vector<std::size_t>& medoids) {
    const std::size_t n = d.size();
    Assignment a;
    a.near.assign(n, 0);
    a.dn.assign(n, kInf);
    a.ds.assign(n, kInf);
    for (std::size_t o = 0; o < n; ++o) {
        for (std::size_t m = 0; m < medoids.size(); ++m) {
            const double v = d(o, medoids[m]);
            if (v < a.dn[o]) {
                a.ds[o] = a.dn[o];
                a.dn[o] = v;
                a.near[o] = m;
            } else if (v < a.ds[o]) {
                a.ds[o] = v;
            }
        }
        a.cost += a.dn[o];
    }
    return a;
}

std::vector<std::size_t> seed_plus_plus(const Full& d, std::size_t k, Rng& rng) {
    const std::size_t n = d.size();
    std::vector<std::size_t> medoids;
    std::vector<char> chosen(n, 0);
    std::vector<double> nearest(n, kInf);
    auto pick = [&](std::size_t c) {
        medoids.push_back(c);
        chosen[c] = 1;
        for (std::size_t o = 0; o < n; ++o) nearest[o] = std::min(nearest[o], d(o, c));
    };
    pick(static_cast<std::size_t>(rng.discrete_uniform(0, static_cast<std::int64_t>(n) - 1)));
    while (medoids.size() < k) {
        double total = 0.0;
        for (std::size_t o = 0; o < n; ++o) {
            if (!chosen[o]) total += nearest[o] * nearest[o];
        }
        std::size_t next = n;
        if (total > 0.0) {
            const double target = rng.uniform() * total;
            double acc = 0.0;
            for (std::size_t o = 0; o < n; ++o) {
                if (chosen[o]) continue;
                acc += nearest[o] * nearest[o];
                if (acc > target && nearest[o] > 0.0) {
                    next = o;
                    break;
                }
            }
            if (next == n) {
                for (std::size_t o = n; o-- > 0;) {
                    if (!chosen[o] && nearest[o] > 0.0) {
                        next = o;
                        break;
                    }
                }
            }
        } else {
            // Every remaining object coincides with a medoid: pick uniformly.
            std::vector<std::size_t> rest;
            for (std::size_t o = 0; o < n; ++o) {
                if (!chosen[o]) rest.push_back(o);
            }
            next = rest[static_cast<std::size_t>(rng.discrete_uniform(0, static_cast<std::int64_t>(rest.size()) - 1))];
        }
        pick(next);
    }
    return medoids;
}

KMedoidsResult run_pam(const Full& d, std::size_t k, Rng rng, int max_iter) {
    const std::size_t n = d.size();
    KMedoidsResult out;
    out.medoids = seed_plus_plus(d, k, rng);
    Assignment a = assign(d, out.medoids);
    out.trace.push_back(a.cost);
    std::vector<char> is_medoid(n, 0);
    for (auto m : out.medoids) is_medoid[m] = 1;

    std::vector<double> removal(k), delta(k);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::fill(removal.begin(), removal.end(), 0.0);
        for (std::size_t o = 0; o < n; ++o) removal[a.near[o]] += a.ds[o] - a.dn[o];
        double best = 0.0;
        std::size_t best_x = n, best_m = k;
        for (std::size_t x = 0; x < n; ++x) {
            if (is_medoid[x]) continue;
            delta = removal;
            double shared = 0.0;
            const double* row = &d.v[x * n];
            for (std::size_t o = 0; o < n; ++o) {
                const double dox = row[o];
                if (dox < a.dn[o]) {
                    shared += dox - a.dn[o];
                    delta[a.near[o]] += a.dn[o] - a.ds[o];
                } else if (dox < a.ds[o]) {
                    delta[a.near[o]] += dox - a.ds[o];
                }
            }
            for (std::size_t m = 0; m < k; ++m) {
                const double v = delta[m] + shared;
                if (v < best) {
                    best = v;
                    best_x = x;
                    best_m = m;
                }
            }
        }
        // Relative guard against swaps that only reshuffle rounding error.
        if (best_x == n || best >= -1e-12 * std::max(1.0, a.cost)) break;
        is_medoid[out.medoids[best_m]] = 0;
        is_medoid[best_x] = 1;
        out.medoids[best_m] = best_x;
        a = assign(d, out.medoids);
        out.trace.push_back(a.cost);
    }
    std::sort(out.medoids.begin(), out.medoids.end());
    a = assign(d, out.medoids);
    std::vector<int> raw(n);
    for (std::size_t o = 0; o < n; ++o) raw[o] = static_cast<int>(a.near[o]);
    // A medoid always heads its own cluster, even when it duplicates another.
    for (std::size_t m = 0; m < k; ++m) raw[out.medoids[m]] = static_cast<int>(m);
    out.cost = a.cost;
    out.partition = make_partition(raw, static_cast<int>(k));
    return out;
}

}  // namespace

double medoid_cost(const DissimilarityMatrix& d, std::span<const std::size_t> medoids) {
    return assign(Full(d), std::vector<std::size_t>(medoids.begin(), medoids.end())).cost;
}

KMedoidsResult kmedoids(const DissimilarityMatrix& d, int k, const Rng& rng, int n_init, int max_iter,
                        unsigned threads) {
    const std::size_t n = d.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw InvalidParameter("kmedoids: k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
    if (n_init < 1) throw InvalidParameter("kmedoids: n_init must be >= 1");
    const Full full(d);
    std::vector<KMedoidsResult> runs(static_cast<std::size_t>(n_init));
    parallel_for(runs.size(), threads, [&](std::size_t r) {
        runs[r] = run_pam(full, static_cast<std::size_t>(k), rng.split(r), max_iter);
    });
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].cost < runs[best].cost) best = r;
    }
    return runs[best];
}

}  // namespace dlpbench
