#include "dlpbench/clustering/genie.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

std::vector<Edge> minimum_spanning_tree(const DissimilarityMatrix& d) {
    const std::size_t n = d.size();
    std::vector<Edge> edges;
    if (n < 2) return edges;
    std::vector<char> in_tree(n, 0);
    std::vector<double> key(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> parent(n, 0);
    std::size_t current = 0;
    in_tree[0] = 1;
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t next = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double w = d(current, v);
            if (w < key[v]) {
                key[v] = w;
                parent[v] = current;
            }
            if (next == n || key[v] < key[next]) next = v;
        }
        in_tree[next] = 1;
        edges.push_back({std::min(parent[next], next), std::max(parent[next], next), key[next]});
        current = next;
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.weight, a.u, a.v) < std::tie(b.weight, b.u, b.v);
    });
    return edges;
}

double gini_index(std::span<const std::size_t> sizes) {
    const std::size_t k = sizes.size();
    if (k < 2) return 0.0;
    std::vector<double> s(sizes.begin(), sizes.end());
    std::sort(s.begin(), s.end());
    double num = 0.0, total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        // Each sorted value is larger than i values and smaller than k - 1 - i.
        num += s[i] * (2.0 * static_cast<double>(i) - static_cast<double>(k) + 1.0);
        total += s[i];
    }
    return num / (static_cast<double>(k - 1) * total);
}

Partition genie(const DissimilarityMatrix& d, int k, double g_threshold) {
    const std::size_t n = d.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw InvalidParameter("genie: k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
    if (g_threshold < 0.0 || g_threshold > 1.0) throw InvalidParameter("genie: threshold must lie in [0, 1]");
    const auto edges = minimum_spanning_tree(d);
    std::vector<std::size_t> parent(n), size(n, 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> used(edges.size(), 0);
    std::size_t clusters = n;
    std::vector<std::size_t> sizes;
    while (clusters > static_cast<std::size_t>(k)) {
        sizes.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (find(i) == i) sizes.push_back(size[i]);
        }
        const bool constrained = gini_index(sizes) > g_threshold;
        const std::size_t smallest = *std::min_element(sizes.begin(), sizes.end());
        std::size_t pick = edges.size();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (used[e]) continue;
            if (!constrained || size[find(edges[e].u)] == smallest || size[find(edges[e].v)] == smallest) {
                pick = e;
                break;
            }
        }
        used[pick] = 1;
        const std::size_t a = find(edges[pick].u);
        const std::size_t b = find(edges[pick].v);
        parent[std::max(a, b)] = std::min(a, b);
        size[std::min(a, b)] += size[std::max(a, b)];
        --clusters;
    }
    std::vector<int> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<int>(find(i));
    return make_partition(raw, k);
}

}  // namespace dlpbench
