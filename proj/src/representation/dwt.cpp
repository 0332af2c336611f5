#include "dlpbench/representation/dwt.hpp"

#include <array>
#include <cmath>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

// Decomposition low-pass filters as published with PyWavelets.
const std::array<std::vector<double>, 5> kFilters{{
    {0.7071067811865476, 0.7071067811865476},
    {-0.12940952255126037, 0.2241438680420134, 0.8365163037378079, 0.48296291314453416},
    {0.03522629188570953, -0.08544127388202666, -0.13501102001025458, 0.45987750211849154, 0.8068915093110925,
     0.33267055295008263},
    {-0.010597401785069032, 0.0328830116668852, 0.030841381835560764, -0.18703481171909309,
     -0.027983769416859854, 0.6308807679298589, 0.7148465705529157, 0.2303778133088965},
    {0.0033357252854737712, -0.012580751999081999, -0.006241490212798274, 0.07757149384004572,
     -0.032244869584638375, -0.24229488706638203, 0.13842814590132074, 0.7243085284377729, 0.6038292697971896,
     0.16010239797419293},
}};

void check_order(int order) {
    if (order < 1 || order > 5) throw InvalidParameter("Daubechies order " + std::to_string(order) + " outside 1..5");
}

// One analysis step: a[k] = sum_j lo[F-1-j] x[(2k + j + 1 - F/2) mod N],
// and the detail uses (-1)^j lo[j] at the same offsets.
void analyse(const std::vector<double>& x, const std::vector<double>& lo, std::vector<double>& a,
             std::vector<double>& d) {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    const auto f = static_cast<std::ptrdiff_t>(lo.size());
    a.assign(x.size() / 2, 0.0);
    d.assign(x.size() / 2, 0.0);
    for (std::ptrdiff_t k = 0; k < n / 2; ++k) {
        for (std::ptrdiff_t j = 0; j < f; ++j) {
            const std::ptrdiff_t idx = (((2 * k + j + 1 - f / 2) % n) + n) % n;
            const double h = lo[static_cast<std::size_t>(f - 1 - j)];
            const double g = (j % 2 == 0 ? 1.0 : -1.0) * lo[static_cast<std::size_t>(j)];
            a[static_cast<std::size_t>(k)] += h * x[static_cast<std::size_t>(idx)];
            d[static_cast<std::size_t>(k)] += g * x[static_cast<std::size_t>(idx)];
        }
    }
}

// Transpose of analyse (the transform is orthogonal).
std::vector<double> synthesise(const std::vector<double>& a, const std::vector<double>& d,
                               const std::vector<double>& lo) {
    const auto n = static_cast<std::ptrdiff_t>(2 * a.size());
    const auto f = static_cast<std::ptrdiff_t>(lo.size());
    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    for (std::ptrdiff_t k = 0; k < n / 2; ++k) {
        for (std::ptrdiff_t j = 0; j < f; ++j) {
            const std::ptrdiff_t idx = (((2 * k + j + 1 - f / 2) % n) + n) % n;
            const double h = lo[static_cast<std::size_t>(f - 1 - j)];
            const double g = (j % 2 == 0 ? 1.0 : -1.0) * lo[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(idx)] += h * a[static_cast<std::size_t>(k)] + g * d[static_cast<std::size_t>(k)];
        }
    }
    return x;
}

}  // namespace

std::string dwt_mode_name(DwtMode m) {
    switch (m) {
        case DwtMode::All: return "all";
        case DwtMode::Approximation: return "approx";
        case DwtMode::LatestPair: return "pair";
    }
    return "?";
}

DwtMode parse_dwt_mode(const std::string& name) {
    for (auto m : {DwtMode::All, DwtMode::Approximation, DwtMode::LatestPair}) {
        if (dwt_mode_name(m) == name) return m;
    }
    throw ParseError("unknown DWT coefficient mode '" + name + "'");
}

const std::vector<double>& daubechies_filter(int order) {
    check_order(order);
    return kFilters[static_cast<std::size_t>(order - 1)];
}

int max_dwt_level(int order) {
    check_order(order);
    const double taps = 2.0 * order;
    return static_cast<int>(std::floor(std::log2(static_cast<double>(kDwtLength) / (taps - 1.0))));
}

WaveletCoefficients wavedec(std::span<const double> x, int order, int level) {
    const auto& lo = daubechies_filter(order);
    if (level < 1 || level > max_dwt_level(order)) {
        throw LevelTooDeep("level " + std::to_string(level) + " outside 1.." + std::to_string(max_dwt_level(order)) +
                           " for db" + std::to_string(order));
    }
    if (x.size() % (std::size_t{1} << level) != 0) {
        throw LevelTooDeep("length " + std::to_string(x.size()) + " not divisible by 2^" + std::to_string(level));
    }
    WaveletCoefficients out;
    std::vector<double> current(x.begin(), x.end());
    std::vector<std::vector<double>> details;
    for (int l = 0; l < level; ++l) {
        std::vector<double> a, d;
        analyse(current, lo, a, d);
        details.push_back(std::move(d));
        current = std::move(a);
    }
    out.approximation = std::move(current);
    out.details.assign(details.rbegin(), details.rend());
    return out;
}

std::vector<double> waverec(const WaveletCoefficients& c, int order) {
    const auto& lo = daubechies_filter(order);
    std::vector<double> current = c.approximation;
    for (const auto& d : c.details) {
        if (d.size() != current.size()) throw LengthMismatch("detail length does not match approximation");
        current = synthesise(current, d, lo);
    }
    return current;
}

std::vector<double> interpolate(std::span<const double> x, std::size_t n) {
    if (x.size() < 2 || n < 2) throw InvalidParameter("interpolation needs at least 2 points on each side");
    std::vector<double> out(n);
    const double scale = static_cast<double>(x.size() - 1) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double pos = static_cast<double>(i) * scale;
        const auto lo = std::min(static_cast<std::size_t>(pos), x.size() - 2);
        const double frac = pos - static_cast<double>(lo);
        out[i] = x[lo] + frac * (x[lo + 1] - x[lo]);
    }
    return out;
}

FeatureVector dwt(std::span<const double> x, int order, int level, DwtMode mode) {
    const auto resampled = interpolate(x, kDwtLength);
    const auto c = wavedec(resampled, order, level);
    FeatureVector out;
    out.values = c.approximation;
    if (mode == DwtMode::Approximation) return out;
    if (mode == DwtMode::LatestPair) {
        out.values.insert(out.values.end(), c.details.front().begin(), c.details.front().end());
        return out;
    }
    for (const auto& d : c.details) out.values.insert(out.values.end(), d.begin(), d.end());
    return out;
}

}  // namespace dlpbench
