#include "dlpbench/dissimilarity/sliding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

void check_lengths(Series x, Series y) {
    if (x.size() != y.size()) {
        throw LengthMismatch(std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    }
    if (x.empty()) throw EmptyInput("distance of empty series");
}

double directed_ksd(Series x, Series y, int w) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    double total = 0.0;
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        double best = std::numeric_limits<double>::infinity();
        for (std::ptrdiff_t s = std::max<std::ptrdiff_t>(0, t - w); s <= std::min(n - 1, t + w); ++s) {
            const double d = x[static_cast<std::size_t>(t)] - y[static_cast<std::size_t>(s)];
            best = std::min(best, d * d);
        }
        total += best;
    }
    return total;
}

}  // namespace

double ksd(Series x, Series y, int w) {
    check_lengths(x, y);
    if (w < 1) throw InvalidParameter("ksd window must be at least 1");
    // Summing in a fixed order keeps the result symmetric bit for bit.
    const double a = directed_ksd(x, y, w);
    const double b = directed_ksd(y, x, w);
    return std::sqrt((std::min(a, b) + std::max(a, b)) / 2.0);
}

double fd(Series x, Series y) {
    check_lengths(x, y);
    const std::size_t n = x.size();
    const auto [xlo, xhi] = std::minmax_element(x.begin(), x.end());
    const auto [ylo, yhi] = std::minmax_element(y.begin(), y.end());
    const double temporal = (std::max(*xhi, *yhi) - std::min(*xlo, *ylo)) / static_cast<double>(n);
    constexpr double amplitude = 1.0;
    auto directed = [&](Series a, Series b) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j) {
                const double gap = static_cast<double>(i > j ? i - j : j - i);
                best = std::min(best, amplitude * std::abs(a[i] - b[j]) + temporal * gap);
            }
            total += best;
        }
        return total;
    };
    const double a = directed(x, y);
    const double b = directed(y, x);
    return (std::min(a, b) + std::max(a, b)) / 2.0;
}

double sbd(Series x, Series y, int& best_shift) {
    check_lengths(x, y);
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    double xx = 0.0, yy = 0.0;
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        xx += x[static_cast<std::size_t>(t)] * x[static_cast<std::size_t>(t)];
        yy += y[static_cast<std::size_t>(t)] * y[static_cast<std::size_t>(t)];
    }
    if (xx == 0.0 || yy == 0.0) throw ZeroNorm("shape-based distance of an all-zero series");
    // CC_s = sum_t x_{t+s} y_t. Shifts are scanned 0, +1, -1, +2, ... so ties
    // keep the smallest |s|.
    double best = -std::numeric_limits<double>::infinity();
    best_shift = 0;
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        for (int sign : {1, -1}) {
            if (k == 0 && sign < 0) continue;
            const std::ptrdiff_t s = sign * k;
            double cc = 0.0;
            for (std::ptrdiff_t t = std::max<std::ptrdiff_t>(0, -s); t < std::min(n, n - s); ++t) {
                cc += x[static_cast<std::size_t>(t + s)] * y[static_cast<std::size_t>(t)];
            }
            if (cc > best) {
                best = cc;
                best_shift = static_cast<int>(s);
            }
        }
    }
    return std::clamp(1.0 - best / std::sqrt(xx * yy), 0.0, 2.0);
}

double sbd(Series x, Series y) {
    int shift = 0;
    return sbd(x, y, shift);
}

double mpd(Series x, Series y, int w, double tau) {
    check_lengths(x, y);
    const std::size_t n = x.size();
    if (w < 3) throw InvalidParameter("mpd window must be at least 3");
    if (static_cast<std::size_t>(w) > n) throw WindowTooLarge("mpd window " + std::to_string(w) + " exceeds length");
    const std::size_t m = n - static_cast<std::size_t>(w) + 1;
    // dist[a * m + b]: window a of x against window b of y.
    std::vector<double> dist(m * m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            double s = 0.0;
            for (std::size_t k = 0; k < static_cast<std::size_t>(w); ++k) {
                const double d = x[a + k] - y[b + k];
                s += d * d;
            }
            dist[a * m + b] = std::sqrt(s);
        }
    }
    std::vector<double> profile(2 * m, std::numeric_limits<double>::infinity());
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            profile[a] = std::min(profile[a], dist[a * m + b]);
            profile[m + b] = std::min(profile[m + b], dist[a * m + b]);
        }
    }
    std::sort(profile.begin(), profile.end());
    const auto k = static_cast<std::size_t>(std::ceil(tau * static_cast<double>(2 * n)));
    return profile[std::min(k, profile.size() - 1)];
}

}  // namespace dlpbench
