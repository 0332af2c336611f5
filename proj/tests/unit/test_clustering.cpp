#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "dlpbench/clustering/algo_spec.hpp"
#include "dlpbench/clustering/birch.hpp"
#include "dlpbench/clustering/genie.hpp"
#include "dlpbench/clustering/hac.hpp"
#include "dlpbench/clustering/kmeans.hpp"
#include "dlpbench/clustering/kmedoids.hpp"
#include "dlpbench/clustering/kshape.hpp"
#include "dlpbench/clustering/spectral.hpp"
#include "dlpbench/core/errors.hpp"
#include "dlpbench/core/normalize.hpp"
#include "dlpbench/core/rng.hpp"
#include "dlpbench/dissimilarity/lockstep.hpp"
#include "dlpbench/dissimilarity/pairwise.hpp"
#include "dlpbench/dissimilarity/sliding.hpp"
#include "dlpbench/evaluation/validity.hpp"
#include "dlpbench/synthgen/scenario.hpp"

using namespace dlpbench;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

using Points = std::vector<std::vector<double>>;

Points random_points(std::size_t n, std::size_t dim, Rng& rng) {
    Points p(n, std::vector<double>(dim));
    for (auto& row : p)
        for (auto& v : row) v = rng.normal();
    return p;
}

/// Gaussian blobs with the given centres; labels in centre order.
Points blobs(const Points& centres, std::size_t per, double sd, Rng& rng, std::vector<int>& labels) {
    Points p;
    labels.clear();
    for (std::size_t c = 0; c < centres.size(); ++c) {
        for (std::size_t i = 0; i < per; ++i) {
            auto row = centres[c];
            for (auto& v : row) v += rng.normal(0.0, sd);
            p.push_back(row);
            labels.push_back(static_cast<int>(c));
        }
    }
    return p;
}

DissimilarityMatrix ed_matrix(const Points& p) {
    DissimilarityMatrix d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) d.set(i, j, euclidean(p[i], p[j]));
    return d;
}

void check_partition(const Partition& p, std::size_t n, int k) {
    REQUIRE(p.size() == n);
    REQUIRE(p.k == k);
    CHECK_NOTHROW(p.validate());
    CHECK(p.non_empty() == k);
}

/// Agglomeration straight from the linkage definitions on member lists.
std::vector<Merge> naive_hac(const DissimilarityMatrix& d, Linkage linkage, const Points* points) {
    const std::size_t n = d.size();
    std::map<std::size_t, std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < n; ++i) clusters[i] = {i};
    auto linkage_value = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        if (linkage == Linkage::Ward) {
            const std::size_t dim = (*points)[0].size();
            std::vector<double> ca(dim, 0.0), cb(dim, 0.0);
            for (auto i : a)
                for (std::size_t t = 0; t < dim; ++t) ca[t] += (*points)[i][t] / static_cast<double>(a.size());
            for (auto i : b)
                for (std::size_t t = 0; t < dim; ++t) cb[t] += (*points)[i][t] / static_cast<double>(b.size());
            const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
            return std::sqrt(2.0 * na * nb / (na + nb)) * euclidean(ca, cb);
        }
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
        for (auto i : a) {
            for (auto j : b) {
                lo = std::min(lo, d(i, j));
                hi = std::max(hi, d(i, j));
                sum += d(i, j);
            }
        }
        if (linkage == Linkage::Single) return lo;
        if (linkage == Linkage::Complete) return hi;
        return sum / static_cast<double>(a.size() * b.size());
    };
    std::vector<Merge> merges;
    while (clusters.size() > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t ba = 0, bb = 0;
        for (auto ia = clusters.begin(); ia != clusters.end(); ++ia) {
            for (auto ib = std::next(ia); ib != clusters.end(); ++ib) {
                const double v = linkage_value(ia->second, ib->second);
                if (v < best) {
                    best = v;
                    ba = ia->first;
                    bb = ib->first;
                }
            }
        }
        auto& target = clusters[ba];
        target.insert(target.end(), clusters[bb].begin(), clusters[bb].end());
        clusters.erase(bb);
        merges.push_back({ba, bb, best, target.size()});
    }
    return merges;
}

/// Kruskal's algorithm on the full graph; returns the total weight.
double kruskal_weight(const DissimilarityMatrix& d) {
    const std::size_t n = d.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, d(i, j)});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.weight < b.weight; });
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    double total = 0.0;
    for (const auto& e : edges) {
        const auto a = find(e.u), b = find(e.v);
        if (a == b) continue;
        parent[b] = a;
        total += e.weight;
    }
    return total;
}

/// Direct simulation of the Genie rule with sizes held per cluster and the
/// Gini index computed from its pairwise definition.
std::vector<int> naive_genie(const DissimilarityMatrix& d, int k, double threshold) {
    const std::size_t n = d.size();
    std::vector<Edge> mst;
    {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, d(i, j)});
        std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.weight < b.weight; });
        std::vector<int> comp(n);
        std::iota(comp.begin(), comp.end(), 0);
        for (const auto& e : edges) {
            if (comp[e.u] == comp[e.v]) continue;
            const int old = comp[e.v];
            for (auto& c : comp)
                if (c == old) c = comp[e.u];
            mst.push_back(e);
        }
    }
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::vector<char> used(mst.size(), 0);
    auto size_of = [&](int l) { return static_cast<double>(std::count(label.begin(), label.end(), l)); };
    for (std::size_t clusters = n; clusters > static_cast<std::size_t>(k); --clusters) {
        std::vector<int> ids(label.begin(), label.end());
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        double num = 0.0, total = 0.0, smallest = 1e300;
        for (std::size_t a = 0; a < ids.size(); ++a) {
            total += size_of(ids[a]);
            smallest = std::min(smallest, size_of(ids[a]));
            for (std::size_t b = a + 1; b < ids.size(); ++b) num += std::abs(size_of(ids[a]) - size_of(ids[b]));
        }
        const double g = ids.size() < 2 ? 0.0 : num / ((static_cast<double>(ids.size()) - 1.0) * total);
        for (std::size_t e = 0; e < mst.size(); ++e) {
            if (used[e]) continue;
            const int a = label[mst[e].u], b = label[mst[e].v];
            if (g > threshold && size_of(a) != smallest && size_of(b) != smallest) continue;
            used[e] = 1;
            for (auto& l : label)
                if (l == b) l = a;
            break;
        }
    }
    return label;
}

}  // namespace

TEST_CASE("HAC merges match the linkage definitions") {
    Rng rng(SeedSpec{1, "hac", 0, 0});
    for (int rep = 0; rep < 40; ++rep) {
        const auto p = random_points(14, 3, rng);
        const auto d = ed_matrix(p);
        for (Linkage l : {Linkage::Single, Linkage::Complete, Linkage::Average, Linkage::Ward}) {
            const auto fast = hac_merges(d, l);
            const auto slow = naive_hac(d, l, &p);
            REQUIRE(fast.size() == slow.size());
            for (std::size_t s = 0; s < fast.size(); ++s) {
                CHECK(fast[s].a == slow[s].a);
                CHECK(fast[s].b == slow[s].b);
                CHECK(fast[s].size == slow[s].size);
                CHECK_THAT(fast[s].height, WithinRel(slow[s].height, 1e-9));
            }
        }
    }
}

TEST_CASE("weighted linkage averages the two merged rows") {
    // d(0,1) = 1 merges first; d({0,1}, 2) = (2 + 6) / 2 = 4 beats d(2,3) = 5.
    DissimilarityMatrix d(4);
    d.set(0, 1, 1.0);
    d.set(0, 2, 2.0);
    d.set(1, 2, 6.0);
    d.set(0, 3, 9.0);
    d.set(1, 3, 9.0);
    d.set(2, 3, 5.0);
    const auto m = hac_merges(d, Linkage::Weighted);
    CHECK(m[0].a == 0);
    CHECK(m[0].b == 1);
    CHECK(m[1].a == 0);
    CHECK(m[1].b == 2);
    CHECK(m[1].height == 4.0);
    CHECK(m[2].height == 7.0);
}

TEST_CASE("HAC edge cases and tie-breaking") {
    Rng rng(SeedSpec{2, "hac", 0, 0});
    const auto d = ed_matrix(random_points(9, 2, rng));
    for (Linkage l : {Linkage::Single, Linkage::Complete, Linkage::Average, Linkage::Weighted, Linkage::Ward}) {
        const auto p = hac(d, l, 9);
        check_partition(p, 9, 9);
        CHECK(p.assignments == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
        const auto one = hac(d, l, 1);
        CHECK(one.assignments == std::vector<int>(9, 0));
    }
    // All distances equal: merges take the smallest pair each time.
    DissimilarityMatrix flat(5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) flat.set(i, j, 1.0);
    const auto m = hac_merges(flat, Linkage::Single);
    for (std::size_t s = 0; s < m.size(); ++s) {
        CHECK(m[s].a == 0);
        CHECK(m[s].b == s + 1);
    }
    CHECK_THROWS_AS(hac(flat, Linkage::Ward, 6), InvalidParameter);
}

TEST_CASE("two separated blobs split exactly for every linkage") {
    Rng rng(SeedSpec{3, "blobs", 0, 0});
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<int> truth;
        const auto p = blobs({{0.0, 0.0}, {10.0, 10.0}}, 6, 1.0, rng, truth);
        const auto d = ed_matrix(p);
        // Brute-force oracle: the 2-partition with the smallest within-cluster
        // sum of squares over all 2^11 splits.
        double best = 1e300;
        std::vector<int> oracle;
        for (unsigned mask = 1; mask < (1u << 11); ++mask) {
            std::vector<int> lab(12, 0);
            for (int i = 1; i < 12; ++i) lab[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1u;
            double wss = 0.0;
            for (int c = 0; c < 2; ++c) {
                double cx = 0, cy = 0, cnt = 0;
                for (std::size_t i = 0; i < 12; ++i)
                    if (lab[i] == c) cx += p[i][0], cy += p[i][1], ++cnt;
                if (cnt == 0) continue;
                cx /= cnt, cy /= cnt;
                for (std::size_t i = 0; i < 12; ++i)
                    if (lab[i] == c) wss += (p[i][0] - cx) * (p[i][0] - cx) + (p[i][1] - cy) * (p[i][1] - cy);
            }
            if (wss < best) best = wss, oracle = lab;
        }
        CHECK(ari(oracle, truth) == 1.0);
        for (Linkage l : {Linkage::Single, Linkage::Complete, Linkage::Average, Linkage::Weighted, Linkage::Ward}) {
            CHECK(ari(hac(d, l, 2).assignments, oracle) == 1.0);
        }
    }
}

TEST_CASE("single linkage merge heights follow sorted MST edges") {
    Rng rng(SeedSpec{4, "chain", 0, 0});
    for (int rep = 0; rep < 30; ++rep) {
        // A noisy chain along a line.
        Points p;
        double x = 0.0;
        for (int i = 0; i < 15; ++i) {
            x += rng.uniform(0.5, 2.0);
            p.push_back({x, rng.normal(0.0, 0.1)});
        }
        const auto d = ed_matrix(p);
        const auto merges = hac_merges(d, Linkage::Single);
        const auto mst = minimum_spanning_tree(d);
        REQUIRE(merges.size() == mst.size());
        for (std::size_t s = 0; s < mst.size(); ++s) CHECK(merges[s].height == mst[s].weight);
    }
}

TEST_CASE("HAC is permutation equivariant") {
    Rng rng(SeedSpec{5, "perm", 0, 0});
    for (int rep = 0; rep < 20; ++rep) {
        const auto p = random_points(30, 4, rng);
        std::vector<std::size_t> order(30);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(std::span<std::size_t>(order));
        Points q;
        for (auto i : order) q.push_back(p[i]);
        for (Linkage l : {Linkage::Single, Linkage::Complete, Linkage::Average, Linkage::Weighted, Linkage::Ward}) {
            const auto a = hac(ed_matrix(p), l, 4);
            const auto b = hac(ed_matrix(q), l, 4);
            std::vector<int> back(30);
            for (std::size_t i = 0; i < 30; ++i) back[order[i]] = b.assignments[i];
            CHECK(ari(a.assignments, back) == 1.0);
        }
    }
}

TEST_CASE("PAM matches the exhaustive best medoid pair") {
    Rng rng(SeedSpec{6, "pam", 0, 0});
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 5 + static_cast<std::size_t>(rep % 6);
        const auto d = ed_matrix(random_points(n, 2, rng));
        double best = 1e300;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const std::vector<std::size_t> m{a, b};
                best = std::min(best, medoid_cost(d, m));
            }
        const auto r = kmedoids(d, 2, rng.split(static_cast<std::uint64_t>(rep)));
        CHECK_THAT(r.cost, WithinAbs(best, 1e-12));
        check_partition(r.partition, n, 2);
    }
}

TEST_CASE("PAM trivial cases, duplication invariance and monotone cost") {
    Rng rng(SeedSpec{7, "pam", 0, 0});
    const auto p = random_points(12, 3, rng);
    const auto d = ed_matrix(p);
    const auto all = kmedoids(d, 12, rng);
    CHECK(all.cost == 0.0);
    check_partition(all.partition, 12, 12);

    Points twice = p;
    twice.insert(twice.end(), p.begin(), p.end());
    const auto r1 = kmedoids(d, 3, rng);
    const auto r2 = kmedoids(ed_matrix(twice), 3, rng);
    std::vector<std::size_t> m2;
    for (auto m : r2.medoids) m2.push_back(m % 12);
    std::sort(m2.begin(), m2.end());
    CHECK(m2 == r1.medoids);
    CHECK_THAT(r2.cost, WithinRel(2.0 * r1.cost, 1e-12));

    const auto big = kmedoids(ed_matrix(random_points(200, 5, rng)), 8, rng, 5);
    for (std::size_t s = 1; s < big.trace.size(); ++s) CHECK(big.trace[s] < big.trace[s - 1]);
    CHECK_THAT(big.trace.back(), WithinRel(big.cost, 1e-12));
}

TEST_CASE("PAM with duplicated points keeps k non-empty clusters") {
    DissimilarityMatrix d(6);  // every point identical
    const auto r = kmedoids(d, 4, Rng(SeedSpec{8, "dup", 0, 0}));
    check_partition(r.partition, 6, 4);
    CHECK(r.cost == 0.0);
}

TEST_CASE("k-means examples and monotone inertia") {
    Rng rng(SeedSpec{9, "km", 0, 0});
    const auto p = random_points(50, 3, rng);
    const auto one = kmeans(p, 1, rng);
    for (std::size_t t = 0; t < 3; ++t) {
        double mean = 0.0;
        for (const auto& row : p) mean += row[t] / 50.0;
        CHECK_THAT(one.centers[0][t], WithinAbs(mean, 1e-12));
    }
    std::vector<int> truth;
    const auto b = blobs({{0, 0, 0}, {5, 5, 0}, {0, 5, 5}}, 30, 0.3, rng, truth);
    CHECK(ari(kmeans(b, 3, rng).partition.assignments, truth) == 1.0);

    const auto many = random_points(300, 4, rng);
    for (int seed = 0; seed < 10; ++seed) {
        const auto r = kmeans(many, 12, rng.split(static_cast<std::uint64_t>(seed)), 1);
        for (std::size_t s = 1; s < r.trace.size(); ++s) CHECK(r.trace[s] <= r.trace[s - 1] + 1e-12);
        check_partition(r.partition, 300, 12);
    }
    // More clusters than distinct points still yields k non-empty clusters.
    const Points dup(10, std::vector<double>{1.0, 2.0});
    check_partition(kmeans(dup, 3, rng).partition, 10, 3);
}

TEST_CASE("BIRCH subclusters respect the threshold") {
    Rng rng(SeedSpec{10, "birch", 0, 0});
    const auto p = random_points(400, 3, rng);
    for (int branching : {3, 50}) {
        for (double threshold : {0.3, 0.8}) {
            const auto member = birch_subclusters(p, branching, threshold);
            std::map<std::size_t, std::vector<std::size_t>> groups;
            for (std::size_t i = 0; i < p.size(); ++i) groups[member[i]].push_back(i);
            CHECK(groups.size() == *std::max_element(member.begin(), member.end()) + 1);
            for (const auto& [id, idx] : groups) {
                std::vector<double> c(3, 0.0);
                for (auto i : idx)
                    for (std::size_t t = 0; t < 3; ++t) c[t] += p[i][t] / static_cast<double>(idx.size());
                double r2 = 0.0;
                for (auto i : idx) {
                    const double e = euclidean(p[i], c);
                    r2 += e * e / static_cast<double>(idx.size());
                }
                CHECK(std::sqrt(r2) <= threshold + 1e-9);
            }
        }
    }
    CHECK(birch_subclusters(p, 3, 0.5) == birch_subclusters(p, 3, 0.5));
}

TEST_CASE("BIRCH examples") {
    Rng rng(SeedSpec{11, "birch", 0, 0});
    const auto p = random_points(6, 2, rng);
    const auto single = birch(p, 6);
    check_partition(single.partition, 6, 6);

    std::vector<int> truth;
    const auto b = blobs({{0, 0}, {4, 0}, {0, 4}, {4, 4}}, 50, 0.5, rng, truth);
    const auto r = birch(b, 4, 50, 0.1);
    const auto ward = hac(ed_matrix(b), Linkage::Ward, 4);
    CHECK(ari(r.partition.assignments, ward.assignments) >= 0.95);

    // A coarse start threshold is reduced until k entries exist.
    const auto coarse = birch(b, 4, 50, 100.0);
    CHECK(coarse.threshold < 100.0);
    check_partition(coarse.partition, b.size(), 4);

    const Points same(5, std::vector<double>{0.5, 0.5});
    CHECK_THROWS_AS(birch(same, 2), ThresholdUnderflow);
}

TEST_CASE("spectral clustering recovers blocks and rings") {
    // Block-structured dissimilarities.
    const std::size_t blocks = 4, per = 8, n = blocks * per;
    DissimilarityMatrix d(n);
    std::vector<int> truth(n);
    for (std::size_t i = 0; i < n; ++i) {
        truth[i] = static_cast<int>(i / per);
        for (std::size_t j = i + 1; j < n; ++j) d.set(i, j, i / per == j / per ? 1.0 : 10.0);
    }
    const Rng rng(SeedSpec{12, "spectral", 0, 0});
    CHECK(ari(spectral(d, 4, rng).partition.assignments, truth) == 1.0);

    // Two concentric rings: k-means on the coordinates cannot separate them.
    Rng draw(SeedSpec{12, "rings", 0, 0});
    Points ring;
    std::vector<int> ring_truth;
    for (int r = 0; r < 2; ++r) {
        for (int i = 0; i < 80; ++i) {
            const double angle = draw.uniform(0.0, 2.0 * M_PI);
            const double radius = (r == 0 ? 1.0 : 6.0) + draw.normal(0.0, 0.05);
            ring.push_back({radius * std::cos(angle), radius * std::sin(angle)});
            ring_truth.push_back(r);
        }
    }
    const auto rd = ed_matrix(ring);
    CHECK(ari(kmeans(ring, 2, rng).partition.assignments, ring_truth) < 0.2);
    const auto s = spectral(rd, 2, rng);
    CHECK(ari(s.partition.assignments, ring_truth) == 1.0);

    // Permuting the input permutes the labels.
    std::vector<std::size_t> order(ring.size());
    std::iota(order.begin(), order.end(), 0);
    draw.shuffle(std::span<std::size_t>(order));
    Points permuted;
    for (auto i : order) permuted.push_back(ring[i]);
    const auto sp = spectral(ed_matrix(permuted), 2, rng);
    std::vector<int> back(ring.size());
    for (std::size_t i = 0; i < order.size(); ++i) back[order[i]] = sp.partition.assignments[i];
    CHECK(ari(back, s.partition.assignments) == 1.0);
}

TEST_CASE("spectral clustering fails after the kernel schedule") {
    Points p(20, std::vector<double>{0.0});
    for (std::size_t i = 0; i < 19; ++i) p[i][0] = 0.01 * static_cast<double>(i);
    p[19][0] = 1e6;
    CHECK_THROWS_AS(spectral(ed_matrix(p), 2, Rng(SeedSpec{13, "fail", 0, 0})), EigenFailure);
}

TEST_CASE("Genie with threshold 1 equals single linkage") {
    Rng rng(SeedSpec{14, "genie", 0, 0});
    for (int rep = 0; rep < 10000; ++rep) {
        const std::size_t n = 6 + static_cast<std::size_t>(rep % 9);
        const auto d = ed_matrix(random_points(n, 2, rng));
        const int k = 1 + rep % 4;
        REQUIRE(genie(d, k, 1.0).assignments == hac(d, Linkage::Single, k).assignments);
    }
}

TEST_CASE("Genie follows a direct simulation of its rule") {
    Rng rng(SeedSpec{15, "genie", 0, 0});
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 8 + static_cast<std::size_t>(rep % 20);
        const auto d = ed_matrix(random_points(n, 2, rng));
        for (double g : {0.0, 0.3, 0.6}) {
            const int k = 2 + rep % 3;
            REQUIRE(genie(d, k, g).assignments == canonical_labels(naive_genie(d, k, g)));
        }
    }
    // Two chains and a far singleton. Single linkage isolates the singleton;
    // with three clusters left the sizes {5, 5, 1} give Gini 8/22 > 0.3, so
    // Genie must merge the singleton instead.
    Points chain;
    for (int i = 0; i < 5; ++i) chain.push_back({static_cast<double>(i)});
    for (int i = 0; i < 5; ++i) chain.push_back({10.0 + i});
    chain.push_back({40.0});
    const auto d = ed_matrix(chain);
    CHECK(genie(d, 2, 1.0).assignments == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    const auto constrained = genie(d, 2, 0.3);
    CHECK(constrained.assignments == std::vector<int>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1});
    CHECK(constrained.assignments == canonical_labels(naive_genie(d, 2, 0.3)));
    CHECK(genie(d, 2, 0.4).assignments == genie(d, 2, 1.0).assignments);
}

TEST_CASE("MST weight matches Kruskal and Gini values") {
    Rng rng(SeedSpec{16, "mst", 0, 0});
    for (int rep = 0; rep < 50; ++rep) {
        const auto d = ed_matrix(random_points(20, 3, rng));
        const auto mst = minimum_spanning_tree(d);
        CHECK(mst.size() == 19);
        double w = 0.0;
        for (const auto& e : mst) w += e.weight;
        CHECK_THAT(w, WithinRel(kruskal_weight(d), 1e-12));
    }
    CHECK(gini_index(std::vector<std::size_t>{1, 1, 1}) == 0.0);
    CHECK(gini_index(std::vector<std::size_t>{1, 3}) == 0.5);
    CHECK_THAT(gini_index(std::vector<std::size_t>{1, 2, 3}), WithinAbs(4.0 / 12.0, 1e-15));
    CHECK(gini_index(std::vector<std::size_t>{7}) == 0.0);
}

TEST_CASE("k-shape centroids and alignment") {
    std::vector<double> base(48);
    for (std::size_t t = 0; t < 48; ++t) base[t] = std::exp(-0.5 * std::pow((static_cast<double>(t) - 20.0) / 3.0, 2));
    const auto ts = minmax_normalize(base);
    const std::vector<TimeSeries> same(5, ts);
    const auto r = kshape(same, 1, Rng(SeedSpec{17, "ks", 0, 0}), 3);
    const auto z = z_normalize(ts.values());
    for (std::size_t t = 0; t < 48; ++t) CHECK_THAT(r.centroids[0][t], WithinAbs(z[t], 1e-8));

    std::vector<TimeSeries> shifted;
    for (int s = -4; s <= 4; ++s) {
        std::vector<double> y(48);
        for (std::size_t t = 0; t < 48; ++t) {
            y[t] = std::exp(-0.5 * std::pow((static_cast<double>(t) - 20.0 - s) / 3.0, 2));
        }
        shifted.push_back(minmax_normalize(y));
    }
    const auto k1 = kshape(shifted, 1, Rng(SeedSpec{17, "ks", 1, 0}), 3);
    for (const auto& s : shifted) CHECK(sbd(k1.centroids[0], z_normalize(s.values())) < 0.05);
}

TEST_CASE("k-shape cost never increases and separates distinct shapes") {
    Rng rng(SeedSpec{18, "ks", 0, 0});
    std::vector<TimeSeries> series;
    std::vector<int> truth;
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < 15; ++i) {
            std::vector<double> y(48);
            const double shift = rng.uniform(-2.0, 2.0);
            for (std::size_t t = 0; t < 48; ++t) {
                const double u = static_cast<double>(t) + shift;
                y[t] = c == 0   ? std::exp(-0.5 * std::pow((u - 24.0) / 3.0, 2))
                       : c == 1 ? std::exp(-0.5 * std::pow((u - 12.0) / 2.0, 2)) + std::exp(-0.5 * std::pow((u - 36.0) / 2.0, 2))
                                : (u > 24.0 ? 1.0 : 0.0);
                y[t] += rng.normal(0.0, 0.03);
            }
            series.push_back(minmax_normalize(y));
            truth.push_back(c);
        }
    }
    const auto r = kshape(series, 3, rng, 10);
    check_partition(r.partition, series.size(), 3);
    CHECK(ari(r.partition.assignments, truth) >= 0.9);
    for (int seed = 0; seed < 10; ++seed) {
        const auto one = kshape(series, 3, rng.split(static_cast<std::uint64_t>(seed)), 1);
        for (std::size_t s = 1; s < one.trace.size(); ++s) CHECK(one.trace[s] <= one.trace[s - 1]);
        CHECK(one.cost == one.trace.back());
    }
}

TEST_CASE("embed_rows shapes and neighbour ranking") {
    Rng rng(SeedSpec{19, "embed", 0, 0});
    auto p = random_points(25, 2, rng);
    p[7] = p[3];
    const auto d = ed_matrix(p);
    const auto rows = embed_rows(d);
    CHECK(rows.size() == 25);
    for (const auto& r : rows) CHECK(r.size() == 25);
    CHECK(rows[3] == rows[7]);
    // Per-object Spearman correlation between direct and embedded distances.
    double sum = 0.0, worst = 1.0;
    for (std::size_t i = 0; i < 25; ++i) {
        std::vector<double> direct, embedded;
        for (std::size_t j = 0; j < 25; ++j) {
            if (j == i) continue;
            direct.push_back(d(i, j));
            embedded.push_back(euclidean(rows[i], rows[j]));
        }
        const double rho = 1.0 - spearman_distance(direct, embedded);
        sum += rho;
        worst = std::min(worst, rho);
    }
    CHECK(sum / 25.0 >= 0.9);
    CHECK(worst >= 0.5);
}

TEST_CASE("algorithm ids round trip") {
    for (const char* id : {"hac(single)", "hac(complete)", "hac(average)", "hac(weighted)", "hac(ward)", "kmedoids",
                           "kmeans", "birch", "spectral", "genie", "kshape", "birch(threshold=0.01)",
                           "genie(gini=0.5)", "kmeans(inits=5)", "spectral(delta=40)"}) {
        CHECK(AlgoSpec::parse(id).id() == id);
    }
    CHECK(AlgoSpec::parse("hac(linkage=ward)").id() == "hac(ward)");
    CHECK(AlgoSpec::parse("HAC( Ward )").linkage == Linkage::Ward);
    CHECK(AlgoSpec::parse("kshape").indivisible());
    CHECK(paradigm_algorithms().size() == 9);
    CHECK_THROWS_AS(AlgoSpec::parse("dbscan"), ParseError);
    CHECK_THROWS_AS(AlgoSpec::parse("hac(median)"), ParseError);
    CHECK_THROWS_AS(AlgoSpec::parse("genie(gini=2)"), InvalidParameter);
    CHECK_THROWS_AS(AlgoSpec::parse("birch(delta=3)"), ParseError);
}

TEST_CASE("every algorithm returns k clusters independent of thread count") {
    ScenarioSpec spec;
    spec.n = 120;
    const auto data = build_scenario(spec, SeedSpec{20, "cluster", 0, 0});
    const auto d = pairwise_matrix(MeasureSpec::parse("ed"), data, 1);
    const int k = data.distinct_clusters();
    const Rng rng(SeedSpec{20, "algo", 0, 0});
    std::vector<AlgoSpec> algos = paradigm_algorithms();
    algos.push_back(AlgoSpec::parse("kmeans"));
    algos.push_back(AlgoSpec::parse("kshape(inits=4)"));
    for (const auto& a : algos) {
        ClusterInput input{&d, {}, data.series};
        const auto p1 = cluster(a, input, k, rng, 1);
        const auto p3 = cluster(a, input, k, rng, 3);
        INFO(a.id());
        check_partition(p1, data.size(), k);
        CHECK(p1 == p3);
        CHECK(ari(p1.assignments, data.labels) > 0.2);
    }
}
