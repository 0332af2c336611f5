#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/rng.hpp"
#include "dlpbench/evaluation/conflicts.hpp"
#include "dlpbench/evaluation/nearest_neighbour.hpp"
#include "dlpbench/evaluation/validity.hpp"

using namespace dlpbench;
using Catch::Matchers::WithinAbs;

namespace {

using Labels = std::vector<int>;

Labels random_labels(Rng& rng, std::size_t n, int k) {
    Labels out(n);
    for (auto& l : out) l = static_cast<int>(rng.discrete_uniform(0, k - 1));
    return out;
}

// Pair-counting ARI straight from the definition.
double ari_oracle(const Labels& p, const Labels& g) {
    double a = 0, b = 0, c = 0, d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const bool sp = p[i] == p[j], sg = g[i] == g[j];
            if (sp && sg) ++a;
            else if (sp) ++b;
            else if (sg) ++c;
            else ++d;
        }
    }
    const double n = a + b + c + d;
    const double expected = (a + b) * (a + c) / n;
    const double max_index = 0.5 * ((a + b) + (a + c));
    if (max_index == expected) return 1.0;
    return (a - expected) / (max_index - expected);
}

double mutual_information(const Labels& p, const Labels& g) {
    std::map<std::pair<int, int>, double> joint;
    std::map<int, double> mp, mg;
    const double n = static_cast<double>(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        joint[{p[i], g[i]}] += 1;
        mp[p[i]] += 1;
        mg[g[i]] += 1;
    }
    double mi = 0;
    for (const auto& [key, v] : joint) mi += v / n * std::log(n * v / (mp[key.first] * mg[key.second]));
    return mi;
}

double entropy_of(const Labels& l) {
    std::map<int, double> m;
    for (int v : l) m[v] += 1;
    double h = 0;
    for (const auto& [k, v] : m) h -= v / l.size() * std::log(v / l.size());
    return h;
}

// AMI with the expected MI obtained by averaging over every permutation of g,
// which is exactly the hypergeometric expectation.
double ami_oracle(const Labels& p, const Labels& observed) {
    Labels g = observed;
    std::sort(g.begin(), g.end());
    double total = 0;
    double count = 0;
    std::vector<std::size_t> idx(g.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
        Labels perm(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) perm[i] = g[idx[i]];
        total += mutual_information(p, perm);
        ++count;
    } while (std::next_permutation(idx.begin(), idx.end()));
    const double emi = total / count;
    const double norm = 0.5 * (entropy_of(p) + entropy_of(g));
    return (mutual_information(p, observed) - emi) / (norm - emi);
}

double best_assignment_bruteforce(const std::vector<std::vector<double>>& w) {
    const std::size_t r = w.size(), c = w[0].size();
    const std::size_t big = std::max(r, c);
    std::vector<std::size_t> perm(big);
    std::iota(perm.begin(), perm.end(), 0);
    double best = -1e300;
    do {
        double s = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (perm[i] < c) s += w[i][perm[i]];
        }
        best = std::max(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("ARI fixed examples and pair-counting oracle") {
    CHECK_THAT(ari(Labels{0, 0, 1, 1}, Labels{0, 1, 0, 1}), WithinAbs(-0.5, 1e-15));
    CHECK_THAT(ari_oracle(Labels{0, 0, 1, 1}, Labels{0, 1, 0, 1}), WithinAbs(-0.5, 1e-15));
    Rng rng(SeedSpec{1, "ari", 0, 0});
    for (int k = 0; k < 300; ++k) {
        const auto n = static_cast<std::size_t>(rng.discrete_uniform(3, 40));
        const auto p = random_labels(rng, n, static_cast<int>(rng.discrete_uniform(1, 6)));
        const auto g = random_labels(rng, n, static_cast<int>(rng.discrete_uniform(1, 6)));
        REQUIRE_THAT(ari(p, g), WithinAbs(ari_oracle(p, g), 1e-12));
    }
}

TEST_CASE("AMI matches permutation-averaged expected MI") {
    Rng rng(SeedSpec{2, "ami", 0, 0});
    for (int k = 0; k < 30; ++k) {
        const auto p = random_labels(rng, 7, 3);
        const auto g = random_labels(rng, 7, 3);
        const auto cp = Contingency::build(p, g);
        if (cp.row_sums.size() < 2 || cp.col_sums.size() < 2) continue;
        REQUIRE_THAT(ami(p, g), WithinAbs(ami_oracle(p, g), 1e-10));
    }
}

TEST_CASE("AMI and ARI agree with frozen reference values") {
    // Reference values produced once with a standard implementation
    // (hypergeometric EMI, arithmetic normalisation).
    struct Case {
        Labels p, g;
        double ami, ari;
    };
    const std::vector<Case> cases{
        {{0, 0, 0, 1, 1, 2}, {0, 0, 1, 1, 2, 2}, 0.08372678378671243, 0.07407407407407407},
        {{0, 0, 1, 1}, {0, 1, 0, 1}, -0.49999999999999944, -0.5},
        {{0, 1, 2, 0, 1, 2, 0, 1, 2, 2}, {0, 0, 0, 1, 1, 1, 2, 2, 2, 2}, -0.3511857745978148, -0.25},
        {{0, 0, 0, 0, 1, 1, 1, 2, 2, 3, 3, 3}, {1, 1, 0, 0, 2, 2, 2, 2, 3, 3, 0, 0}, 0.37962846628118574,
         0.3018335684062059},
    };
    for (const auto& c : cases) {
        CHECK_THAT(ami(c.p, c.g), WithinAbs(c.ami, 1e-12));
        CHECK_THAT(ari(c.p, c.g), WithinAbs(c.ari, 1e-12));
    }
}

TEST_CASE("1 - NVD hand fixture") {
    // Rows max: 2 + 1 + 1 = 4; column max: 2 + 1 + 1 = 4; N = 6.
    const Labels p{0, 0, 0, 1, 1, 2}, g{0, 0, 1, 1, 2, 2};
    CHECK_THAT(one_minus_nvd(p, g), WithinAbs(1.0 - (12.0 - 4.0 - 4.0) / 12.0, 1e-15));
}

TEST_CASE("PSI hand-computed three-cluster fixture") {
    // S = 2/3 + 1/2 + 1/2 = 5/3, E = 1/3 + 1/3 + 1/6 = 5/6, PSI = (5/6) / (13/6).
    const Labels p{0, 0, 0, 1, 1, 2}, g{0, 0, 1, 1, 2, 2};
    CHECK_THAT(psi(p, g), WithinAbs(5.0 / 13.0, 1e-15));
    CHECK_THAT(psi(g, p), WithinAbs(5.0 / 13.0, 1e-15));
    // One predicted cluster: S = E = 1/3, so the score is at chance level.
    CHECK(psi(Labels{0, 0, 0, 0, 0, 0}, g) == 0.0);
    CHECK(psi(Labels{0, 0, 0}, Labels{5, 5, 5}) == 1.0);
}

TEST_CASE("Hungarian matches brute force on rectangular matrices") {
    Rng rng(SeedSpec{3, "hungarian", 0, 0});
    for (int k = 0; k < 200; ++k) {
        const auto r = static_cast<std::size_t>(rng.discrete_uniform(1, 6));
        const auto c = static_cast<std::size_t>(rng.discrete_uniform(1, 6));
        std::vector<std::vector<double>> w(r, std::vector<double>(c));
        for (auto& row : w)
            for (auto& v : row) v = rng.uniform();
        const auto match = hungarian_max(w);
        double s = 0;
        std::vector<bool> used(c, false);
        int matched = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (match[i] < 0) continue;
            REQUIRE_FALSE(used[static_cast<std::size_t>(match[i])]);
            used[static_cast<std::size_t>(match[i])] = true;
            s += w[i][static_cast<std::size_t>(match[i])];
            ++matched;
        }
        REQUIRE(matched == static_cast<int>(std::min(r, c)));
        REQUIRE_THAT(s, WithinAbs(best_assignment_bruteforce(w), 1e-12));
    }
}

TEST_CASE("all indices equal 1 on identical partitions and ignore relabelling") {
    Rng rng(SeedSpec{4, "identical", 0, 0});
    for (int k = 0; k < 100; ++k) {
        const auto g = random_labels(rng, 50, static_cast<int>(rng.discrete_uniform(2, 8)));
        Labels relabelled(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) relabelled[i] = 100 - 3 * g[i];
        for (auto f : {ari, ami, one_minus_nvd, psi}) {
            REQUIRE(f(g, g) == Catch::Approx(1.0).epsilon(1e-12));
            REQUIRE(f(relabelled, g) == Catch::Approx(1.0).epsilon(1e-12));
        }
        const auto p = random_labels(rng, 50, 4);
        Labels p2(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) p2[i] = (p[i] + 1) % 4;
        for (auto f : {ari, ami, one_minus_nvd, psi}) REQUIRE_THAT(f(p2, g), WithinAbs(f(p, g), 1e-12));
    }
}

TEST_CASE("index ranges and symmetry on random partitions") {
    Rng rng(SeedSpec{5, "ranges", 0, 0});
    for (int k = 0; k < 300; ++k) {
        const auto n = static_cast<std::size_t>(rng.discrete_uniform(10, 80));
        const auto p = random_labels(rng, n, static_cast<int>(rng.discrete_uniform(2, 8)));
        const auto g = random_labels(rng, n, static_cast<int>(rng.discrete_uniform(2, 8)));
        const double a = ari(p, g);
        REQUIRE(a >= -0.5 - 1e-12);
        REQUIRE(a <= 1.0);
        REQUIRE(ami(p, g) <= 1.0);
        REQUIRE(ami(p, g) > -0.5);
        REQUIRE(one_minus_nvd(p, g) >= 0.0);
        REQUIRE(one_minus_nvd(p, g) <= 1.0);
        REQUIRE(psi(p, g) >= 0.0);
        REQUIRE(psi(p, g) <= 1.0);
        REQUIRE_THAT(ari(p, g), WithinAbs(ari(g, p), 1e-12));
        REQUIRE_THAT(ami(p, g), WithinAbs(ami(g, p), 1e-12));
        REQUIRE_THAT(one_minus_nvd(p, g), WithinAbs(one_minus_nvd(g, p), 1e-12));
        REQUIRE_THAT(psi(p, g), WithinAbs(psi(g, p), 1e-12));
    }
}

TEST_CASE("validity input errors and outlier filtering") {
    CHECK_THROWS_AS(ari(Labels{0, 1}, Labels{0}), LengthMismatch);
    CHECK_THROWS_AS(psi(Labels{}, Labels{}), EmptyInput);

    const Labels truth{0, -1, 1, -1, 1}, assigned{2, 0, 1, 1, 1};
    const auto [t, a] = filter_outliers(truth, assigned);
    CHECK(t == Labels{0, 1, 1});
    CHECK(a == Labels{2, 1, 1});
    const auto [t2, a2] = filter_outliers(Labels{0, 1}, Labels{1, 0});
    CHECK(t2 == Labels{0, 1});
    const auto [t3, a3] = filter_outliers(Labels{-1, -1}, Labels{1, 0});
    CHECK(t3.empty());
    CHECK_THROWS_AS(ari(a3, t3), EmptyInput);
}

TEST_CASE("1NN on the zero matrix predicts the lowest index's class") {
    // 20 balanced clusters of 10, stored in cluster order.
    Labels labels;
    for (int c = 0; c < 20; ++c)
        for (int r = 0; r < 10; ++r) labels.push_back(c);
    const DissimilarityMatrix zero(labels.size());
    const auto res = loo_1nn(zero, labels);
    CHECK(res.overall == 0.05);
    CHECK(res.per_cluster.at(0) == 1.0);
    CHECK(res.per_cluster.at(7) == 0.0);
    for (int p : res.predictions) CHECK(p == 0);
}

TEST_CASE("1NN four-point fixture matches neighbour enumeration") {
    //      0    1    2    3
    // 0    -   1.0  3.0  2.0
    // 1         -   0.5  4.0
    // 2              -   0.5
    DissimilarityMatrix d(4);
    d.set(0, 1, 1.0);
    d.set(0, 2, 3.0);
    d.set(0, 3, 2.0);
    d.set(1, 2, 0.5);
    d.set(1, 3, 4.0);
    d.set(2, 3, 0.5);
    const Labels labels{0, 0, 1, 1};
    // Neighbours: 0->1, 1->2, 2->1 (tie 1 vs 3 goes to 1), 3->2.
    const auto res = loo_1nn(d, labels);
    CHECK(res.predictions == Labels{0, 1, 0, 1});
    CHECK(res.overall == 0.5);
    CHECK(res.per_cluster.at(0) == 0.5);
    CHECK(res.per_cluster.at(1) == 0.5);
    CHECK_THROWS_AS(loo_1nn(d, Labels{0, -1, 1, 1}), InvariantViolation);
}

TEST_CASE("1NN is invariant under monotone transforms of the matrix") {
    Rng rng(SeedSpec{6, "monotone", 0, 0});
    const std::size_t n = 60;
    DissimilarityMatrix d(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = rng.uniform();
            d.set(i, j, v);
            d2.set(i, j, std::sqrt(v) * 3.0 + 1.0);
        }
    }
    const auto labels = random_labels(rng, n, 4);
    CHECK(loo_1nn(d, labels).predictions == loo_1nn(d2, labels).predictions);
}

TEST_CASE("confusion matrix counts") {
    const auto m = confusion_matrix(Labels{0, 0, 1, 2}, Labels{0, 1, 1, 0}, 3);
    CHECK(m[0][0] == 1);
    CHECK(m[0][1] == 1);
    CHECK(m[1][1] == 1);
    CHECK(m[2][0] == 1);
}

TEST_CASE("confusion mass by conflict tag") {
    const auto& map = conflict_map();
    std::vector<std::vector<double>> diag(20, std::vector<double>(20, 0.0));
    for (int i = 0; i < 20; ++i) diag[i][i] = 10.0;
    const auto none = confusion_by_conflict(diag, map);
    CHECK(none.total == 0.0);
    CHECK(none.untagged == 0.0);
    for (double m : none.per_tag) CHECK(m == 0.0);

    auto pair = diag;
    pair[5][7] = 4.0;
    pair[7][5] = 3.0;
    pair[0][1] = 1.0;
    const auto mass = confusion_by_conflict(pair, map);
    CHECK(mass.total == 8.0);
    const auto rel = static_cast<std::size_t>(ConflictTag::RelativeMagnitude);
    CHECK(mass.per_tag[rel] >= 7.0);
    CHECK(std::max_element(mass.per_tag.begin(), mass.per_tag.end()) - mass.per_tag.begin() ==
          static_cast<std::ptrdiff_t>(rel));

    // Every confusion lands either on untagged or on each of its pair's tags.
    Rng rng(SeedSpec{21, "conflict", 0, 0});
    std::vector<std::vector<double>> random(20, std::vector<double>(20, 0.0));
    double expected_tagged = 0.0;
    double total = 0.0;
    double untagged = 0.0;
    for (int t = 0; t < 20; ++t) {
        for (int p = 0; p < 20; ++p) {
            random[t][p] = static_cast<double>(rng.discrete_uniform(0, 3));
            if (t == p) continue;
            total += random[t][p];
            const auto tags = map.tags(t, p);
            expected_tagged += random[t][p] * static_cast<double>(tags.size());
            if (tags.empty()) untagged += random[t][p];
        }
    }
    const auto r = confusion_by_conflict(random, map);
    CHECK(r.total == total);
    CHECK(r.untagged == untagged);
    CHECK(std::accumulate(r.per_tag.begin(), r.per_tag.end(), 0.0) == expected_tagged);

    CHECK_THROWS_AS(confusion_by_conflict(std::vector<std::vector<double>>(3, std::vector<double>(3)), map),
                    LengthMismatch);
}
