#include "dlpbench/representation/sax.hpp"

#include <algorithm>
#include <cmath>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

double edit_distance(const SaxString& a, const SaxString& b, bool weighted) {
    const std::size_t n = a.symbols.size();
    const std::size_t m = b.symbols.size();
    const double scale = a.n_b > 1 ? 1.0 / (a.n_b - 1) : 1.0;
    std::vector<double> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<double>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<double>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            const int gap = std::abs(a.symbols[i - 1] - b.symbols[j - 1]);
            const double sub = weighted ? gap * scale : (gap == 0 ? 0.0 : 1.0);
            cur[j] = std::min({prev[j - 1] + sub, prev[j] + 1.0, cur[j - 1] + 1.0});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

std::size_t lcs_length(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace

std::string sax_distance_name(SaxDistance d) {
    switch (d) {
        case SaxDistance::Mindist: return "mindist";
        case SaxDistance::Levenshtein: return "lev";
        case SaxDistance::VLevenshtein: return "vlev";
        case SaxDistance::Lcss: return "lcss";
    }
    return "?";
}

SaxDistance parse_sax_distance(const std::string& name) {
    for (auto d : {SaxDistance::Mindist, SaxDistance::Levenshtein, SaxDistance::VLevenshtein, SaxDistance::Lcss}) {
        if (sax_distance_name(d) == name) return d;
    }
    throw ParseError("unknown SAX distance '" + name + "'");
}

SaxString sax(int n_b, BinStrategy strategy, std::span<const double> x) {
    return SaxString{digitize(strategy, n_b, x), n_b};
}

std::vector<double> mindist_breakpoints(BinStrategy strategy, int n_b) {
    if (strategy != BinStrategy::Uniform) return gaussian_breakpoints(n_b);
    if (n_b < 2 || n_b > 26) throw InvalidParameter("bin count " + std::to_string(n_b) + " outside [2, 26]");
    std::vector<double> out;
    for (int i = 1; i < n_b; ++i) out.push_back(static_cast<double>(i) / n_b);
    return out;
}

double sax_distance(SaxDistance kind, const SaxString& a, const SaxString& b, BinStrategy strategy) {
    if (a.n_b != b.n_b) throw InvalidParameter("SAX strings use different alphabets");
    switch (kind) {
        case SaxDistance::Mindist: {
            if (a.symbols.size() != b.symbols.size()) throw LengthMismatch("MINDIST needs equal lengths");
            const auto beta = mindist_breakpoints(strategy, a.n_b);
            double sum = 0.0;
            for (std::size_t t = 0; t < a.symbols.size(); ++t) {
                const int lo = std::min(a.symbols[t], b.symbols[t]);
                const int hi = std::max(a.symbols[t], b.symbols[t]);
                if (hi - lo <= 1) continue;
                const double gap = beta[static_cast<std::size_t>(hi - 1)] - beta[static_cast<std::size_t>(lo)];
                sum += gap * gap;
            }
            return std::sqrt(sum);
        }
        case SaxDistance::Levenshtein: return edit_distance(a, b, false);
        case SaxDistance::VLevenshtein: return edit_distance(a, b, true);
        case SaxDistance::Lcss: {
            if (a.symbols.size() != b.symbols.size()) throw LengthMismatch("SAX LCSS needs equal lengths");
            if (a.symbols.empty()) return 0.0;
            return 1.0 - static_cast<double>(lcs_length(a.symbols, b.symbols)) / static_cast<double>(a.symbols.size());
        }
    }
    return 0.0;
}

}  // namespace dlpbench
