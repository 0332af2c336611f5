#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/rng.hpp"
#include "dlpbench/stats/cliques.hpp"
#include "dlpbench/stats/correlation.hpp"
#include "dlpbench/stats/ranks.hpp"
#include "dlpbench/stats/tests.hpp"

using namespace dlpbench;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Exact two-sided p by walking every sign pattern of the given ranks.
double brute_wilcoxon_p(const std::vector<double>& ranks, double w_plus) {
    const std::size_t n = ranks.size();
    double lower = 0, upper = 0;
    const double total = std::pow(2.0, static_cast<double>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) s += ranks[i];
        }
        if (s <= w_plus + 1e-9) lower += 1;
        if (s >= w_plus - 1e-9) upper += 1;
    }
    return std::min(1.0, 2.0 * std::min(lower, upper) / total);
}

bool is_clique(const std::vector<std::vector<bool>>& adj, unsigned mask) {
    for (unsigned i = 0; i < adj.size(); ++i)
        for (unsigned j = i + 1; j < adj.size(); ++j)
            if ((mask >> i & 1U) && (mask >> j & 1U) && !adj[i][j]) return false;
    return true;
}

}  // namespace

TEST_CASE("rank_table averages ties and ranks higher scores first") {
    const ScoreTable s{{0.9, 0.8}, {0.5, 0.8}, {0.7, 0.1}};
    const auto r = rank_table(s);
    CHECK(r[0] == std::vector<double>{1.0, 1.5});
    CHECK(r[1] == std::vector<double>{3.0, 1.5});
    CHECK(r[2] == std::vector<double>{2.0, 3.0});
    CHECK(mean_ranks(s) == std::vector<double>{1.25, 2.25, 2.5});
    CHECK_THROWS_AS(rank_table({{0.1, NAN}, {0.2, 0.3}}), MissingCells);
    CHECK_THROWS_AS(rank_table({{0.1, 0.2}, {0.2}}), MissingCells);
}

TEST_CASE("Friedman hand fixture with one tie") {
    // Rank sums 4.5, 8.5, 11 give 5.375 before the tie correction 15/16.
    const ScoreTable s{{0.9, 0.8, 0.7, 0.95}, {0.85, 0.8, 0.6, 0.9}, {0.5, 0.7, 0.65, 0.6}};
    const auto res = friedman(s);
    CHECK_THAT(res.statistic, WithinAbs(5.375 / 0.9375, 1e-6));
    CHECK_THAT(res.p, WithinRel(0.056888238346101516, 1e-9));
}

TEST_CASE("Friedman is invariant to monotone transforms and handles total ties") {
    Rng rng(SeedSpec{9, "friedman", 0, 0});
    ScoreTable s(5, std::vector<double>(12));
    for (auto& row : s)
        for (auto& v : row) v = rng.uniform();
    ScoreTable t = s;
    for (auto& row : t)
        for (auto& v : row) v = std::exp(3.0 * v) - 2.0;
    CHECK(friedman(s).statistic == friedman(t).statistic);

    const ScoreTable ties{{0.5, 0.5, 0.5}, {0.5, 0.5, 0.5}};
    const auto res = friedman(ties);
    CHECK(res.statistic == 0.0);
    CHECK(res.p == 1.0);
}

TEST_CASE("Wilcoxon matches frozen exact and approximate values") {
    const std::vector<double> a{0.91, 0.85, 0.77, 0.93, 0.60, 0.88, 0.79, 0.70, 0.95, 0.81};
    // One zero difference and no tied magnitudes, so n = 9.
    const std::vector<double> b{0.875, 0.86, 0.70, 0.90, 0.64, 0.80, 0.79, 0.65, 0.935, 0.72};
    const auto exact = wilcoxon_signed_rank(a, b, WilcoxonMethod::Exact);
    CHECK(exact.statistic == 6.0);
    CHECK_THAT(exact.p, WithinRel(0.0546875, 1e-12));
    const auto approx = wilcoxon_signed_rank(a, b, WilcoxonMethod::Normal);
    CHECK_THAT(approx.p, WithinRel(0.0580240199462214, 1e-9));
    CHECK(wilcoxon_signed_rank(a, b).p == exact.p);
}

TEST_CASE("Wilcoxon exact p agrees with a sign-pattern enumeration") {
    Rng rng(SeedSpec{3, "wilcoxon", 0, 0});
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> a(6), b(6);
        for (std::size_t i = 0; i < 6; ++i) {
            // Coarse grid so tied absolute differences occur.
            a[i] = static_cast<double>(rng.discrete_uniform(0, 8));
            b[i] = static_cast<double>(rng.discrete_uniform(0, 8));
        }
        std::vector<double> d;
        for (std::size_t i = 0; i < 6; ++i)
            if (a[i] != b[i]) d.push_back(a[i] - b[i]);
        if (d.size() < 5) {
            if (d.empty()) CHECK(wilcoxon_signed_rank(a, b).p == 1.0);
            else CHECK_THROWS_AS(wilcoxon_signed_rank(a, b), TooFewPairs);
            continue;
        }
        std::vector<double> ranks(d.size());
        double w_plus = 0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            double less = 0, equal = 0;
            for (double e : d) {
                less += std::abs(e) < std::abs(d[i]);
                equal += std::abs(e) == std::abs(d[i]);
            }
            ranks[i] = less + (equal + 1) / 2;
            if (d[i] > 0) w_plus += ranks[i];
        }
        CHECK_THAT(wilcoxon_signed_rank(a, b, WilcoxonMethod::Exact).p,
                   WithinAbs(brute_wilcoxon_p(ranks, w_plus), 1e-12));
    }
}

TEST_CASE("Wilcoxon exact and normal p agree at n = 15 on random fixtures", "[approx-gap]") {
    Rng rng(SeedSpec{4, "wilcoxon15", 0, 0});
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<double> a(15), b(15);
        const double shift = rng.uniform(0.0, 0.8);
        for (std::size_t i = 0; i < 15; ++i) {
            a[i] = rng.normal(shift, 1.0);
            b[i] = rng.normal(0.0, 1.0);
        }
        const double pe = wilcoxon_signed_rank(a, b, WilcoxonMethod::Exact).p;
        const double pn = wilcoxon_signed_rank(a, b, WilcoxonMethod::Normal).p;
        CHECK_THAT(pe, WithinAbs(pn, 0.01));
    }
}

TEST_CASE("Wilcoxon exact and normal p agree at n = 15 for every statistic", "[approx-gap]") {
    // Walks every attainable W+ with untied ranks 1..15. The largest gap is
    // about 0.011 near W+ = 74, just above the 0.01 tolerance.
    const std::vector<double> b(15, 0.0);
    for (unsigned w = 0; w <= 120; ++w) {
        // Pick a subset of 1..15 summing to w for the positive signs.
        std::vector<double> a(15);
        unsigned left = w;
        for (int r = 15; r >= 1; --r) {
            const bool positive = static_cast<unsigned>(r) <= left;
            if (positive) left -= static_cast<unsigned>(r);
            a[static_cast<std::size_t>(r - 1)] = positive ? r : -r;
        }
        REQUIRE(left == 0);
        const double pe = wilcoxon_signed_rank(a, b, WilcoxonMethod::Exact).p;
        const double pn = wilcoxon_signed_rank(a, b, WilcoxonMethod::Normal).p;
        INFO("W+ = " << w);
        CHECK_THAT(pe, WithinAbs(pn, 0.01));
    }
}

TEST_CASE("Wilcoxon p is symmetric in its arguments") {
    Rng rng(SeedSpec{5, "wsym", 0, 0});
    std::vector<double> a(20), b(20);
    for (std::size_t i = 0; i < 20; ++i) {
        a[i] = rng.uniform();
        b[i] = rng.uniform();
    }
    CHECK(wilcoxon_signed_rank(a, b).p == wilcoxon_signed_rank(b, a).p);
    CHECK_THROWS_AS(wilcoxon_signed_rank(a, std::vector<double>(3)), LengthMismatch);
}

TEST_CASE("Bonferroni clips at one") {
    const std::vector<double> p{0.01};
    CHECK(bonferroni(p, 703)[0] == 1.0);
    const std::vector<double> q{1e-5, 0.02};
    const auto c = bonferroni(q, 3);
    CHECK_THAT(c[0], WithinRel(3e-5, 1e-12));
    CHECK_THAT(c[1], WithinRel(0.06, 1e-12));
}

TEST_CASE("nonsignificance_graph separates clearly different methods") {
    ScoreTable s(3, std::vector<double>(20));
    Rng rng(SeedSpec{6, "graph", 0, 0});
    for (std::size_t d = 0; d < 20; ++d) {
        const double base = rng.uniform();
        s[0][d] = base + 1.0;
        s[1][d] = base + 1.0 + rng.normal(0, 0.01);
        s[2][d] = base;
    }
    const auto g = nonsignificance_graph(s);
    CHECK(g[0][1]);
    CHECK_FALSE(g[0][2]);
    CHECK_FALSE(g[1][2]);
}

TEST_CASE("maximal_cliques agrees with brute force on small graphs") {
    Rng rng(SeedSpec{7, "cliques", 0, 0});
    for (int rep = 0; rep < 100; ++rep) {
        const unsigned n = 5;
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = rng.bernoulli(0.5);

        std::vector<std::vector<int>> expected;
        for (unsigned mask = 1; mask < (1U << n); ++mask) {
            if (!is_clique(adj, mask)) continue;
            bool maximal = true;
            for (unsigned v = 0; v < n && maximal; ++v)
                if (!(mask >> v & 1U) && is_clique(adj, mask | (1U << v))) maximal = false;
            if (!maximal) continue;
            std::vector<int> c;
            for (unsigned v = 0; v < n; ++v)
                if (mask >> v & 1U) c.push_back(static_cast<int>(v));
            expected.push_back(c);
        }
        auto got = maximal_cliques(adj);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("maximal_cliques orders by best mean rank") {
    // Path 0-1-2: cliques {0,1} and {1,2}. Node 2 has the best rank.
    std::vector<std::vector<bool>> adj{{false, true, false}, {true, false, true}, {false, true, false}};
    const std::vector<double> ranks{3.0, 2.0, 1.0};
    const auto c = maximal_cliques(adj, ranks);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == std::vector<int>{2, 1});
    CHECK(c[1] == std::vector<int>{1, 0});
    CHECK(reportable_cliques(c, ranks, 1.5).size() == 1);
}

TEST_CASE("correlation matches frozen values") {
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    const std::vector<double> y{3, 1, 4, 1, 5, 9, 2, 6, 5, 3};
    const auto p = correlation(x, y, CorrelationKind::Pearson);
    CHECK_THAT(p.statistic, WithinRel(0.33432539901899483, 1e-12));
    CHECK_THAT(p.p, WithinRel(0.3450710477331118, 1e-9));
    const auto s = correlation(x, y, CorrelationKind::Spearman);
    CHECK_THAT(s.statistic, WithinRel(0.3914537831560393, 1e-12));
    CHECK_THAT(s.p, WithinRel(0.2632875529923414, 1e-9));
    CHECK_THROWS_AS(correlation(x, std::vector<double>(10, 1.0), CorrelationKind::Pearson), ZeroVariance);
    CHECK_THROWS_AS(correlation(std::vector<double>{1, 2}, std::vector<double>{2, 1}, CorrelationKind::Pearson),
                    InvalidParameter);
}
