#include "dlpbench/dissimilarity/lockstep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

void check_lengths(Series x, Series y) {
    if (x.size() != y.size()) {
        throw LengthMismatch(std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
}

// Clamp rounding noise so correlation distances stay in [0, 2].
double one_minus(double r) { return std::clamp(1.0 - r, 0.0, 2.0); }

bool identical(Series x, Series y) { return std::equal(x.begin(), x.end(), y.begin(), y.end()); }

// Counts inversions of v while merge-sorting it.
long long count_swaps(std::vector<double>& v, std::vector<double>& buf, std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = (lo + hi) / 2;
    long long swaps = count_swaps(v, buf, lo, mid) + count_swaps(v, buf, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            swaps += static_cast<long long>(mid - i);
            buf[k++] = v[j++];
        } else {
            buf[k++] = v[i++];
        }
    }
    while (i < mid) buf[k++] = v[i++];
    while (j < hi) buf[k++] = v[j++];
    std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
    return swaps;
}

// Number of tied pairs in sorted data: sum over runs of r(r-1)/2.
template <typename Eq>
long long tied_pairs(std::size_t n, Eq same) {
    long long total = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i < n && same(i - 1, i)) {
            ++run;
        } else {
            total += static_cast<long long>(run * (run - 1) / 2);
            run = 1;
        }
    }
    return total;
}

}  // namespace

double euclidean(Series x, Series y) {
    check_lengths(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double manhattan(Series x, Series y) {
    check_lengths(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
    return s;
}

double chebyshev(Series x, Series y) {
    check_lengths(x, y);
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

double minkowski(Series x, Series y, double p) {
    if (!(p > 0.0)) throw InvalidParameter("minkowski order must be positive");
    if (p == 1.0) return manhattan(x, y);
    if (p == 2.0) return euclidean(x, y);
    check_lengths(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i] - y[i]), p);
    return std::pow(s, 1.0 / p);
}

double bray_curtis(Series x, Series y) {
    check_lengths(x, y);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += std::abs(x[i] - y[i]);
        den += std::abs(x[i] + y[i]);
    }
    return den == 0.0 ? 0.0 : num / den;
}

double canberra(Series x, Series y) {
    check_lengths(x, y);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double den = std::abs(x[i]) + std::abs(y[i]);
        if (den > 0.0) s += std::abs(x[i] - y[i]) / den;
    }
    return s;
}

double cosine_distance(Series x, Series y) {
    check_lengths(x, y);
    double xy = 0.0, xx = 0.0, yy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xy += x[i] * y[i];
        xx += x[i] * x[i];
        yy += y[i] * y[i];
    }
    if (xx == 0.0 || yy == 0.0) throw ZeroNorm("cosine distance of an all-zero series");
    return one_minus(xy / std::sqrt(xx * yy));
}

double pearson_r(Series x, Series y) {
    check_lengths(x, y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw ZeroVariance("correlation of a constant series");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double pearson_distance(Series x, Series y) { return one_minus(pearson_r(x, y)); }

std::vector<double> average_ranks(Series x) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(x.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
        const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

double spearman_distance(Series x, Series y) {
    check_lengths(x, y);
    if (identical(x, y)) {
        pearson_r(x, y);  // still rejects constants
        return 0.0;
    }
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return one_minus(pearson_r(rx, ry));
}

double kendall_tau_b(Series x, Series y) {
    check_lengths(x, y);
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
    });
    // Knight's algorithm: ties in x, joint ties, then swaps needed to sort y.
    const long long n0 = static_cast<long long>(n * (n - 1) / 2);
    const long long n1 = tied_pairs(n, [&](std::size_t a, std::size_t b) { return x[order[a]] == x[order[b]]; });
    const long long n3 = tied_pairs(n, [&](std::size_t a, std::size_t b) {
        return x[order[a]] == x[order[b]] && y[order[a]] == y[order[b]];
    });
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
    std::vector<double> buf(n);
    const long long swaps = count_swaps(ys, buf, 0, n);
    const long long n2 = tied_pairs(n, [&](std::size_t a, std::size_t b) { return ys[a] == ys[b]; });
    if (n0 == n1 || n0 == n2) throw ZeroVariance("Kendall tau of a constant series");
    const double num = static_cast<double>(n0 - n1 - n2 + n3 - 2 * swaps);
    const double den = std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
    return std::clamp(num / den, -1.0, 1.0);
}

double kendall_distance(Series x, Series y) { return one_minus(kendall_tau_b(x, y)); }

double cid(Series x, Series y) {
    const double ed = euclidean(x, y);
    auto complexity = [](Series s) {
        double c = 0.0;
        for (std::size_t t = 1; t < s.size(); ++t) c += (s[t] - s[t - 1]) * (s[t] - s[t - 1]);
        return std::sqrt(c);
    };
    const double cx = complexity(x);
    const double cy = complexity(y);
    if (cx == cy) return ed;
    const double lo = std::min(cx, cy);
    if (lo == 0.0) throw ZeroVariance("complexity-invariant distance with a constant series");
    return ed * std::max(cx, cy) / lo;
}

double hausdorff(Series x, Series y) {
    std::vector<double> a(x.begin(), x.end());
    std::vector<double> b(y.begin(), y.end());
    if (a.empty() || b.empty()) throw EmptyInput("Hausdorff distance of an empty series");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    auto directed = [](const std::vector<double>& from, const std::vector<double>& to) {
        double worst = 0.0;
        std::size_t j = 0;
        for (double v : from) {
            while (j + 1 < to.size() && to[j + 1] <= v) ++j;
            double best = std::abs(v - to[j]);
            if (j + 1 < to.size()) best = std::min(best, std::abs(to[j + 1] - v));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

MahalanobisContext MahalanobisContext::fit(std::span<const TimeSeries> series) {
    if (series.size() < 2) throw EmptyInput("Mahalanobis context needs at least two series");
    const std::size_t dim = series.front().size();
    const auto n = static_cast<Eigen::Index>(series.size());
    Eigen::MatrixXd data(n, static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto v = series[static_cast<std::size_t>(i)].values();
        if (v.size() != dim) throw LengthMismatch("series lengths differ in Mahalanobis context");
        for (std::size_t t = 0; t < dim; ++t) data(i, static_cast<Eigen::Index>(t)) = v[t];
    }
    const Eigen::RowVectorXd mean = data.colwise().mean();
    const Eigen::MatrixXd centred = data.rowwise() - mean;
    Eigen::MatrixXd cov = (centred.transpose() * centred) / static_cast<double>(n - 1);
    double ridge = 1e-6 * cov.trace() / static_cast<double>(dim);
    if (!(ridge > 0.0)) ridge = 1e-12;
    cov.diagonal().array() += ridge;
    const Eigen::MatrixXd inv = cov.ldlt().solve(Eigen::MatrixXd::Identity(cov.rows(), cov.cols()));

    MahalanobisContext ctx;
    ctx.dim_ = dim;
    ctx.inverse_.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            // Symmetrise so d(x, y) == d(y, x) bit for bit.
            const auto a = static_cast<Eigen::Index>(i);
            const auto b = static_cast<Eigen::Index>(j);
            ctx.inverse_[i * dim + j] = 0.5 * (inv(a, b) + inv(b, a));
        }
    }
    return ctx;
}

double MahalanobisContext::distance(Series x, Series y) const {
    check_lengths(x, y);
    if (x.size() != dim_) throw LengthMismatch("series length differs from Mahalanobis context");
    std::vector<double> d(dim_);
    for (std::size_t i = 0; i < dim_; ++i) d[i] = x[i] - y[i];
    double q = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) row += inverse_[i * dim_ + j] * d[j];
        q += d[i] * row;
    }
    return std::sqrt(std::max(q, 0.0));
}

}  // namespace dlpbench
