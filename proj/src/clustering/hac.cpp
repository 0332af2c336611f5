#include "dlpbench/clustering/hac.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

/// Generic agglomeration over a full matrix with cached nearest neighbours.
/// Each row keeps its nearest active column (smallest index on ties); only
/// rows whose neighbour took part in a merge are rescanned.
std::vector<Merge> agglomerate(std::vector<double>& m, std::size_t n, Linkage linkage, std::vector<double> sizes,
                               std::size_t stop_at) {
    const bool ward = linkage == Linkage::Ward;
    if (ward) {
        for (auto& v : m) v *= v;
    }
    std::vector<char> active(n, 1);
    std::vector<std::size_t> nn(n, n);
    std::vector<double> nnd(n, std::numeric_limits<double>::infinity());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };
    auto rescan = [&](std::size_t i) {
        nn[i] = n;
        nnd[i] = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !active[j]) continue;
            if (at(i, j) < nnd[i]) {
                nnd[i] = at(i, j);
                nn[i] = j;
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i) rescan(i);

    std::vector<Merge> merges;
    std::size_t clusters = n;
    while (clusters > stop_at) {
        std::tuple<double, std::size_t, std::size_t> best{std::numeric_limits<double>::infinity(), n, n};
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || nn[i] == n) continue;
            const std::tuple<double, std::size_t, std::size_t> key{nnd[i], std::min(i, nn[i]), std::max(i, nn[i])};
            if (key < best) best = key;
        }
        const auto [dab, a, b] = best;
        merges.push_back({a, b, ward ? std::sqrt(dab) : dab, static_cast<std::size_t>(sizes[a] + sizes[b])});
        const double na = sizes[a];
        const double nb = sizes[b];
        for (std::size_t c = 0; c < n; ++c) {
            if (!active[c] || c == a || c == b) continue;
            const double dca = at(c, a);
            const double dcb = at(c, b);
            double v = 0.0;
            switch (linkage) {
                case Linkage::Single: v = std::min(dca, dcb); break;
                case Linkage::Complete: v = std::max(dca, dcb); break;
                case Linkage::Average: v = (na * dca + nb * dcb) / (na + nb); break;
                case Linkage::Weighted: v = 0.5 * (dca + dcb); break;
                case Linkage::Ward: {
                    const double nc = sizes[c];
                    v = std::max(0.0, ((nc + na) * dca + (nc + nb) * dcb - nc * dab) / (na + nb + nc));
                    break;
                }
            }
            at(c, a) = v;
            at(a, c) = v;
        }
        sizes[a] += sizes[b];
        active[b] = 0;
        --clusters;
        rescan(a);
        for (std::size_t c = 0; c < n; ++c) {
            if (!active[c] || c == a) continue;
            if (nn[c] == a || nn[c] == b) {
                rescan(c);
            } else if (at(c, a) < nnd[c] || (at(c, a) == nnd[c] && a < nn[c])) {
                nnd[c] = at(c, a);
                nn[c] = a;
            }
        }
    }
    return merges;
}

Partition cut(std::size_t n, const std::vector<Merge>& merges, int k) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& mg : merges) parent[find(mg.b)] = find(mg.a);
    std::vector<int> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<int>(find(i));
    return make_partition(raw, k);
}

void check_k(std::size_t n, int k) {
    if (n == 0) throw EmptyInput("hac on an empty matrix");
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw InvalidParameter("hac: k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
}

}  // namespace

std::vector<Merge> hac_merges(const DissimilarityMatrix& d, Linkage linkage) {
    auto full = d.to_full();
    return agglomerate(full, d.size(), linkage, std::vector<double>(d.size(), 1.0), 1);
}

Partition hac(const DissimilarityMatrix& d, Linkage linkage, int k) {
    check_k(d.size(), k);
    auto full = d.to_full();
    const auto merges =
        agglomerate(full, d.size(), linkage, std::vector<double>(d.size(), 1.0), static_cast<std::size_t>(k));
    return cut(d.size(), merges, k);
}

Partition hac_full(std::vector<double> full, std::size_t n, Linkage linkage, int k, std::span<const double> weights) {
    check_k(n, k);
    if (full.size() != n * n) throw LengthMismatch("hac_full expects an n x n matrix");
    std::vector<double> sizes(n, 1.0);
    if (!weights.empty()) {
        if (weights.size() != n) throw LengthMismatch("hac_full weights differ from n");
        sizes.assign(weights.begin(), weights.end());
    }
    const auto merges = agglomerate(full, n, linkage, std::move(sizes), static_cast<std::size_t>(k));
    return cut(n, merges, k);
}

}  // namespace dlpbench
