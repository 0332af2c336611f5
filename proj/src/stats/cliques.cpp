#include "dlpbench/stats/cliques.hpp"

#include <algorithm>
#include <functional>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacency,
                                              const std::vector<double>& mean_ranks) {
    const auto n = static_cast<int>(adjacency.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(adjacency[static_cast<std::size_t>(i)].size()) != n) {
            throw InvariantViolation("adjacency matrix is not square");
        }
        for (int j = 0; j < n; ++j) {
            if (i != j && adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                              adjacency[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                throw InvariantViolation("adjacency matrix is not symmetric");
            }
        }
    }
    if (!mean_ranks.empty() && static_cast<int>(mean_ranks.size()) != n) {
        throw LengthMismatch("mean ranks do not match the graph size");
    }
    auto adj = [&](int a, int b) {
        return a != b && adjacency[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    };
    std::vector<std::vector<int>> out;
    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> expand =
        [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
            if (p.empty() && x.empty()) {
                out.push_back(r);
                return;
            }
            // Pivot on the vertex of P u X with most neighbours in P.
            int pivot = -1;
            std::size_t best = 0;
            for (const auto* set : {&p, &x}) {
                for (int u : *set) {
                    const auto c = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [&](int v) { return adj(u, v); }));
                    if (pivot < 0 || c > best) {
                        pivot = u;
                        best = c;
                    }
                }
            }
            const std::vector<int> candidates = [&] {
                std::vector<int> c;
                for (int v : p) {
                    if (!adj(pivot, v)) c.push_back(v);
                }
                return c;
            }();
            for (int v : candidates) {
                std::vector<int> np, nx;
                for (int u : p) {
                    if (adj(v, u)) np.push_back(u);
                }
                for (int u : x) {
                    if (adj(v, u)) nx.push_back(u);
                }
                r.push_back(v);
                expand(r, np, nx);
                r.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
            }
        };
    std::vector<int> r, p(static_cast<std::size_t>(n)), x;
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    if (n > 0) expand(r, p, x);

    auto rank = [&](int v) { return mean_ranks.empty() ? static_cast<double>(v) : mean_ranks[static_cast<std::size_t>(v)]; };
    for (auto& c : out) {
        std::sort(c.begin(), c.end(), [&](int a, int b) { return rank(a) != rank(b) ? rank(a) < rank(b) : a < b; });
    }
    std::sort(out.begin(), out.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
        if (rank(a.front()) != rank(b.front())) return rank(a.front()) < rank(b.front());
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

std::vector<std::vector<int>> reportable_cliques(const std::vector<std::vector<int>>& cliques,
                                                 const std::vector<double>& mean_ranks, double max_rank) {
    std::vector<std::vector<int>> out;
    for (const auto& c : cliques) {
        if (c.size() < 2) continue;
        const bool keep = std::any_of(c.begin(), c.end(),
                                      [&](int v) { return mean_ranks.at(static_cast<std::size_t>(v)) <= max_rank; });
        if (keep) out.push_back(c);
    }
    return out;
}

}  // namespace dlpbench
