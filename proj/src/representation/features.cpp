#include "dlpbench/representation/features.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

const std::vector<std::string> kNames{
    // temporal
    "mean", "variance", "std", "longest_strike_below_mean", "longest_strike_above_mean", "time_of_max",
    "time_of_min", "last_time_of_max", "autocorr_lag_1", "autocorr_lag_2", "autocorr_lag_3", "autocorr_lag_4",
    "autocorr_lag_6", "autocorr_lag_12", "autocorr_lag_24", "mean_abs_change", "mean_change",
    "mean_second_derivative", "peaks_support_1", "peaks_support_3", "mean_crossings", "abs_energy",
    "centroid_time",
    // statistical
    "median", "skewness", "kurtosis", "quantile_10", "quantile_25", "quantile_75", "quantile_90", "iqr",
    "mean_abs_deviation", "median_abs_deviation", "rms", "fraction_above_mean", "binned_entropy_10",
    "coefficient_of_variation", "ratio_beyond_1_sigma",
    // spectral
    "spectral_entropy", "dominant_frequency", "spectral_centroid", "spectral_spread", "spectral_rolloff_85",
    "spectral_flatness", "power_daily", "power_half_daily",
    // complexity
    "complexity_estimate", "hurst_rs", "kpss_level", "permutation_entropy", "lempel_ziv",
};

double quantile(std::vector<double> sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double mean_of(std::span<const double> x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double population_variance(std::span<const double> x, double mean) {
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return ss / static_cast<double>(x.size());
}

std::size_t longest_run(std::span<const double> x, auto pred) {
    std::size_t best = 0, run = 0;
    for (double v : x) {
        run = pred(v) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

std::size_t count_peaks(std::span<const double> x, std::size_t support) {
    std::size_t count = 0;
    for (std::size_t t = support; t + support < x.size(); ++t) {
        bool peak = true;
        for (std::size_t s = 1; s <= support && peak; ++s) peak = x[t] > x[t - s] && x[t] > x[t + s];
        count += peak;
    }
    return count;
}

// Power at frequencies 1..n/2 (cycles per series) by direct DFT.
std::vector<double> power_spectrum(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<double> p;
    for (std::size_t k = 1; k <= n / 2; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t t = 0; t < n; ++t) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(k * t) / static_cast<double>(n);
            acc += x[t] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        p.push_back(std::norm(acc));
    }
    return p;
}

double permutation_entropy(std::span<const double> x) {
    std::map<std::array<int, 3>, int> counts;
    std::size_t total = 0;
    for (std::size_t t = 0; t + 2 < x.size(); ++t) {
        std::array<int, 3> order{0, 1, 2};
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[t + a] < x[t + b]; });
        ++counts[order];
        ++total;
    }
    double h = 0.0;
    for (const auto& [key, c] : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log(p);
    }
    return h / std::log(6.0);
}

// LZ76 phrase count of the sequence binarised at its median, normalised by
// n / log2(n).
double lempel_ziv(std::span<const double> x) {
    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    const double med = quantile(sorted, 0.5);
    std::string s;
    for (double v : x) s.push_back(v > med ? '1' : '0');
    const std::size_t n = s.size();
    // Kaspar-Schuster scan with the usual u, v, w counters.
    std::size_t u = 0, v = 1, w = 1, v_max = 1, c = 1;
    for (;;) {
        if (s[u + v - 1] == s[w + v - 1]) {
            ++v;
            if (w + v >= n) {
                ++c;
                break;
            }
        } else {
            v_max = std::max(v, v_max);
            ++u;
            if (u == w) {
                ++c;
                w += v_max;
                if (w >= n) break;
                u = 0;
                v = 1;
                v_max = 1;
            } else {
                v = 1;
            }
        }
    }
    return static_cast<double>(c) * std::log2(static_cast<double>(n)) / static_cast<double>(n);
}

}  // namespace

const std::vector<std::string>& feature_names() { return kNames; }

std::size_t feature_index(std::string_view name) {
    const auto it = std::find(kNames.begin(), kNames.end(), name);
    if (it == kNames.end()) throw InvalidParameter("unknown feature '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - kNames.begin());
}

double hurst_rs(std::span<const double> x) {
    std::vector<double> log_s, log_rs;
    for (std::size_t s : {6, 8, 12, 16, 24, 48}) {
        if (s > x.size()) continue;
        double sum_rs = 0.0;
        std::size_t chunks = 0;
        for (std::size_t begin = 0; begin + s <= x.size(); begin += s) {
            const auto chunk = x.subspan(begin, s);
            const double m = mean_of(chunk);
            const double sd = std::sqrt(population_variance(chunk, m));
            if (sd <= 0.0) continue;
            double y = 0.0, lo = 0.0, hi = 0.0;
            for (double v : chunk) {
                y += v - m;
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
            sum_rs += (hi - lo) / sd;
            ++chunks;
        }
        if (chunks == 0 || sum_rs <= 0.0) continue;
        log_s.push_back(std::log(static_cast<double>(s)));
        log_rs.push_back(std::log(sum_rs / static_cast<double>(chunks)));
    }
    if (log_s.size() < 2) return 0.5;
    const double mx = mean_of(log_s);
    const double my = mean_of(log_rs);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < log_s.size(); ++i) {
        num += (log_s[i] - mx) * (log_rs[i] - my);
        den += (log_s[i] - mx) * (log_s[i] - mx);
    }
    return num / den;
}

double kpss_level(std::span<const double> x) {
    const std::size_t n = x.size();
    const double m = mean_of(x);
    std::vector<double> e(n);
    for (std::size_t t = 0; t < n; ++t) e[t] = x[t] - m;
    const auto lags = static_cast<std::size_t>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
    double lr = 0.0;
    for (double v : e) lr += v * v;
    for (std::size_t l = 1; l <= lags; ++l) {
        double cov = 0.0;
        for (std::size_t t = l; t < n; ++t) cov += e[t] * e[t - l];
        lr += 2.0 * (1.0 - static_cast<double>(l) / static_cast<double>(lags + 1)) * cov;
    }
    lr /= static_cast<double>(n);
    if (lr <= 0.0) return 0.0;
    double partial = 0.0, eta = 0.0;
    for (double v : e) {
        partial += v;
        eta += partial * partial;
    }
    return eta / (static_cast<double>(n) * static_cast<double>(n) * lr);
}

double spectral_entropy(std::span<const double> x) {
    const auto p = power_spectrum(x);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    if (total <= 0.0 || p.size() < 2) return 0.0;
    double h = 0.0;
    for (double v : p) {
        if (v <= 0.0) continue;
        const double q = v / total;
        h -= q * std::log(q);
    }
    return h / std::log(static_cast<double>(p.size()));
}

std::vector<double> extract_features(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n < 8) throw InvalidParameter("feature extraction needs at least 8 samples");
    const double nd = static_cast<double>(n);
    std::vector<double> f;
    f.reserve(kNames.size());

    const double mean = mean_of(x);
    const double var = population_variance(x, mean);
    const double sd = std::sqrt(var);
    const auto max_it = std::max_element(x.begin(), x.end());
    const auto min_it = std::min_element(x.begin(), x.end());
    std::size_t last_max = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (x[t] == *max_it) last_max = t;
    }

    f.push_back(mean);
    f.push_back(var);
    f.push_back(sd);
    f.push_back(static_cast<double>(longest_run(x, [&](double v) { return v < mean; })));
    f.push_back(static_cast<double>(longest_run(x, [&](double v) { return v > mean; })));
    f.push_back(static_cast<double>(max_it - x.begin()));
    f.push_back(static_cast<double>(min_it - x.begin()));
    f.push_back(static_cast<double>(last_max));
    for (std::size_t lag : {1, 2, 3, 4, 6, 12, 24}) {
        double acc = 0.0;
        for (std::size_t t = 0; t + lag < n; ++t) acc += (x[t] - mean) * (x[t + lag] - mean);
        f.push_back(var > 0.0 && lag < n ? acc / (nd * var) : 0.0);
    }
    double abs_change = 0.0, second = 0.0;
    for (std::size_t t = 1; t < n; ++t) abs_change += std::abs(x[t] - x[t - 1]);
    for (std::size_t t = 1; t + 1 < n; ++t) second += (x[t + 1] - 2.0 * x[t] + x[t - 1]) / 2.0;
    f.push_back(abs_change / (nd - 1.0));
    f.push_back((x[n - 1] - x[0]) / (nd - 1.0));
    f.push_back(second / (nd - 2.0));
    f.push_back(static_cast<double>(count_peaks(x, 1)));
    f.push_back(static_cast<double>(count_peaks(x, 3)));
    std::size_t crossings = 0;
    for (std::size_t t = 1; t < n; ++t) crossings += (x[t] > mean) != (x[t - 1] > mean);
    f.push_back(static_cast<double>(crossings));
    double energy = 0.0, weighted = 0.0, total = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        energy += x[t] * x[t];
        weighted += static_cast<double>(t) * x[t];
        total += x[t];
    }
    f.push_back(energy);
    f.push_back(total != 0.0 ? weighted / total : 0.0);

    std::vector<double> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    const double median = quantile(sorted, 0.5);
    double m3 = 0.0, m4 = 0.0, mad = 0.0;
    std::size_t above = 0, beyond = 0;
    for (double v : x) {
        const double d = v - mean;
        m3 += d * d * d;
        m4 += d * d * d * d;
        mad += std::abs(d);
        above += v > mean;
        beyond += std::abs(d) > sd;
    }
    m3 /= nd;
    m4 /= nd;
    std::vector<double> abs_dev;
    for (double v : x) abs_dev.push_back(std::abs(v - median));
    std::sort(abs_dev.begin(), abs_dev.end());
    f.push_back(median);
    f.push_back(var > 0.0 ? m3 / std::pow(var, 1.5) : 0.0);
    f.push_back(var > 0.0 ? m4 / (var * var) - 3.0 : 0.0);
    const double q10 = quantile(sorted, 0.10), q25 = quantile(sorted, 0.25);
    const double q75 = quantile(sorted, 0.75), q90 = quantile(sorted, 0.90);
    f.push_back(q10);
    f.push_back(q25);
    f.push_back(q75);
    f.push_back(q90);
    f.push_back(q75 - q25);
    f.push_back(mad / nd);
    f.push_back(quantile(abs_dev, 0.5));
    f.push_back(std::sqrt(energy / nd));
    f.push_back(static_cast<double>(above) / nd);
    {
        const double lo = sorted.front(), hi = sorted.back();
        std::array<int, 10> bins{};
        for (double v : x) {
            const auto b = hi > lo ? std::min<std::size_t>(9, static_cast<std::size_t>((v - lo) / (hi - lo) * 10.0)) : 0;
            ++bins[b];
        }
        double h = 0.0;
        for (int c : bins) {
            if (c == 0) continue;
            const double p = c / nd;
            h -= p * std::log(p);
        }
        f.push_back(h);
    }
    f.push_back(mean != 0.0 ? sd / mean : 0.0);
    f.push_back(static_cast<double>(beyond) / nd);

    const auto p = power_spectrum(x);
    const double power = std::accumulate(p.begin(), p.end(), 0.0);
    f.push_back(spectral_entropy(x));
    if (power > 0.0) {
        const auto dom = std::max_element(p.begin(), p.end()) - p.begin();
        double centroid = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) centroid += static_cast<double>(k + 1) * p[k];
        centroid /= power;
        double spread = 0.0, cumulative = 0.0, log_sum = 0.0;
        std::size_t rolloff = p.size();
        for (std::size_t k = 0; k < p.size(); ++k) {
            const double freq = static_cast<double>(k + 1);
            spread += (freq - centroid) * (freq - centroid) * p[k];
            cumulative += p[k];
            if (rolloff == p.size() && cumulative >= 0.85 * power) rolloff = k + 1;
            log_sum += std::log(p[k] + 1e-12);
        }
        const double geometric = std::exp(log_sum / static_cast<double>(p.size()));
        f.push_back(static_cast<double>(dom + 1));
        f.push_back(centroid);
        f.push_back(std::sqrt(spread / power));
        f.push_back(static_cast<double>(rolloff));
        f.push_back(geometric / (power / static_cast<double>(p.size())));
        f.push_back(p[0] / power);
        f.push_back(p.size() > 1 ? p[1] / power : 0.0);
    } else {
        f.insert(f.end(), 7, 0.0);
    }

    double ce = 0.0;
    for (std::size_t t = 1; t < n; ++t) ce += (x[t] - x[t - 1]) * (x[t] - x[t - 1]);
    f.push_back(std::sqrt(ce));
    f.push_back(hurst_rs(x));
    f.push_back(kpss_level(x));
    f.push_back(permutation_entropy(x));
    f.push_back(lempel_ziv(x));
    return f;
}

}  // namespace dlpbench
