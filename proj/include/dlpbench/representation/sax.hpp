#pragma once

#include <span>
#include <string>
#include <vector>

#include "dlpbench/representation/binning.hpp"

namespace dlpbench {

/// One symbol (alphabet rank 0..n_b-1) per sample; no PAA step, so a DLP
/// gives 48 symbols.
struct SaxString {
    std::vector<int> symbols;
    int n_b = 4;

    bool operator==(const SaxString&) const = default;
};

enum class SaxDistance { Mindist, Levenshtein, VLevenshtein, Lcss };

std::string sax_distance_name(SaxDistance d);
SaxDistance parse_sax_distance(const std::string& name);

/// Symbols from digitize(strategy, n_b, x).
SaxString sax(int n_b, BinStrategy strategy, std::span<const double> x);

/// Breakpoints used by MINDIST's lookup table: i / n_b for Uniform (series
/// lie in [0, 1]) and the standard normal table otherwise.
std::vector<double> mindist_breakpoints(BinStrategy strategy, int n_b);

/// Distances between equal-alphabet strings:
///  * Mindist: sqrt(sum cell(a_t, b_t)^2) with cell = 0 for ranks at most one
///    apart and the breakpoint gap otherwise; the sqrt(n / w) factor is 1.
///  * Levenshtein: unit insert, delete and substitute costs.
///  * VLevenshtein: substitution costs |rank(a) - rank(b)| / (n_b - 1),
///    insertions and deletions cost 1.
///  * Lcss: 1 - L / n with L the longest common subsequence.
/// LengthMismatch for Mindist and Lcss on different lengths; InvalidParameter
/// on differing alphabets.
double sax_distance(SaxDistance kind, const SaxString& a, const SaxString& b,
                    BinStrategy strategy = BinStrategy::Quantile);

}  // namespace dlpbench
