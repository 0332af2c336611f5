#include "dlpbench/dissimilarity/elastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t check(Series x, Series y, int w) {
    if (x.size() != y.size()) {
        throw LengthMismatch(std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
    if (x.empty()) throw EmptyInput("elastic distance of empty series");
    if (w < 1) throw InvalidParameter("window must be at least 1");
    return x.size();
}

bool in_band(std::size_t i, std::size_t j, int w) {
    const std::size_t gap = i > j ? i - j : j - i;
    return gap <= static_cast<std::size_t>(w);
}

// Two-row rolling buffer indexed 0..n; row 0 is the border.
struct Rows {
    explicit Rows(std::size_t n, double fill) : prev(n + 1, fill), cur(n + 1, fill) {}
    void swap() { std::swap(prev, cur); }
    std::vector<double> prev;
    std::vector<double> cur;
};

double msm_cost(double value, double prev, double other, double c) {
    if ((prev <= value && value <= other) || (prev >= value && value >= other)) return c;
    return c + std::min(std::abs(value - prev), std::abs(value - other));
}

}  // namespace

double dtw(Series x, Series y, int w) {
    const std::size_t n = check(x, y, w);
    Rows r(n, kInf);
    r.prev[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        std::fill(r.cur.begin(), r.cur.end(), kInf);
        const std::size_t lo = i > static_cast<std::size_t>(w) ? i - static_cast<std::size_t>(w) : 1;
        const std::size_t hi = std::min(n, i + static_cast<std::size_t>(w));
        for (std::size_t j = lo; j <= hi; ++j) {
            const double d = x[i - 1] - y[j - 1];
            r.cur[j] = d * d + std::min({r.prev[j], r.cur[j - 1], r.prev[j - 1]});
        }
        r.swap();
    }
    return r.prev[n];
}

double erp(Series x, Series y, int w, double g) {
    const std::size_t n = check(x, y, w);
    Rows r(n, kInf);
    r.prev[0] = 0.0;
    for (std::size_t j = 1; j <= n; ++j) r.prev[j] = r.prev[j - 1] + std::abs(y[j - 1] - g);
    for (std::size_t i = 1; i <= n; ++i) {
        std::fill(r.cur.begin(), r.cur.end(), kInf);
        r.cur[0] = r.prev[0] + std::abs(x[i - 1] - g);
        for (std::size_t j = 1; j <= n; ++j) {
            if (!in_band(i, j, w)) continue;
            r.cur[j] = std::min({r.prev[j - 1] + std::abs(x[i - 1] - y[j - 1]),
                                 r.prev[j] + std::abs(x[i - 1] - g),
                                 r.cur[j - 1] + std::abs(y[j - 1] - g)});
        }
        r.swap();
    }
    return r.prev[n];
}

double ers(Series x, Series y, int w, double eps) {
    const std::size_t n = check(x, y, w);
    Rows r(n, kInf);
    for (std::size_t j = 0; j <= n; ++j) r.prev[j] = static_cast<double>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        std::fill(r.cur.begin(), r.cur.end(), kInf);
        r.cur[0] = static_cast<double>(i);
        for (std::size_t j = 1; j <= n; ++j) {
            if (!in_band(i, j, w)) continue;
            const double sub = std::abs(x[i - 1] - y[j - 1]) <= eps ? 0.0 : 1.0;
            r.cur[j] = std::min({r.prev[j - 1] + sub, r.prev[j] + 1.0, r.cur[j - 1] + 1.0});
        }
        r.swap();
    }
    return r.prev[n] / static_cast<double>(n);
}

double lcss(Series x, Series y, int w, double eps) {
    const std::size_t n = check(x, y, w);
    Rows r(n, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        std::fill(r.cur.begin(), r.cur.end(), 0.0);
        for (std::size_t j = 1; j <= n; ++j) {
            if (!in_band(i, j, w)) continue;
            if (std::abs(x[i - 1] - y[j - 1]) <= eps) {
                r.cur[j] = r.prev[j - 1] + 1.0;
            } else {
                r.cur[j] = std::max(r.prev[j], r.cur[j - 1]);
            }
        }
        r.swap();
    }
    return 1.0 - r.prev[n] / static_cast<double>(n);
}

double msm(Series x, Series y, int w, double c) {
    const std::size_t n = check(x, y, w);
    // Full matrix: the recurrence reads x_{i-1} and y_{j-1} alongside the
    // previous row, and n is small.
    std::vector<double> d(n * n, kInf);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return d[i * n + j]; };
    at(0, 0) = std::abs(x[0] - y[0]);
    for (std::size_t i = 1; i < n && in_band(i, 0, w); ++i) at(i, 0) = at(i - 1, 0) + msm_cost(x[i], x[i - 1], y[0], c);
    for (std::size_t j = 1; j < n && in_band(0, j, w); ++j) at(0, j) = at(0, j - 1) + msm_cost(y[j], y[j - 1], x[0], c);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
            if (!in_band(i, j, w)) continue;
            at(i, j) = std::min({at(i - 1, j - 1) + std::abs(x[i] - y[j]),
                                 at(i - 1, j) + msm_cost(x[i], x[i - 1], y[j], c),
                                 at(i, j - 1) + msm_cost(y[j], y[j - 1], x[i], c)});
        }
    }
    return at(n - 1, n - 1);
}

double twed(Series x, Series y, double nu, double lambda) {
    const std::size_t n = check(x, y, 1);
    auto xs = [&](std::size_t i) { return i == 0 ? 0.0 : x[i - 1]; };
    auto ys = [&](std::size_t j) { return j == 0 ? 0.0 : y[j - 1]; };
    Rows r(n, kInf);
    r.prev[0] = 0.0;
    const double del_add = nu + lambda;
    for (std::size_t i = 1; i <= n; ++i) {
        std::fill(r.cur.begin(), r.cur.end(), kInf);
        for (std::size_t j = 1; j <= n; ++j) {
            const double gap = static_cast<double>(i > j ? i - j : j - i);
            const double del_x = r.prev[j] + std::abs(xs(i - 1) - xs(i)) + del_add;
            const double del_y = r.cur[j - 1] + std::abs(ys(j - 1) - ys(j)) + del_add;
            const double match = r.prev[j - 1] + std::abs(xs(i) - ys(j)) + std::abs(xs(i - 1) - ys(j - 1)) +
                                 2.0 * nu * gap;
            r.cur[j] = std::min({del_x, del_y, match});
        }
        r.swap();
    }
    return r.prev[n];
}

double ers_auto_epsilon(Series x, Series y) {
    auto sd = [](Series s) {
        double m = 0.0;
        for (double v : s) m += v;
        m /= static_cast<double>(s.size());
        double ss = 0.0;
        for (double v : s) ss += (v - m) * (v - m);
        return std::sqrt(ss / static_cast<double>(s.size()));
    };
    return std::max(sd(x), sd(y)) / 4.0;
}

}  // namespace dlpbench
