#include "dlpbench/clustering/birch.hpp"

#include <cmath>
#include <limits>

#include "dlpbench/clustering/hac.hpp"
#include "dlpbench/core/errors.hpp"

namespace dlpbench {

namespace {

/// Clustering feature: count, linear sum and sum of squared norms.
struct Entry {
    double n = 0.0;
    std::vector<double> ls;
    double ss = 0.0;
    int child = -1;    // node index for non-leaf entries
    int leaf_id = -1;  // stable id for leaf entries

    void absorb(const Entry& o) {
        n += o.n;
        for (std::size_t t = 0; t < ls.size(); ++t) ls[t] += o.ls[t];
        ss += o.ss;
    }
    double centroid_sq_dist(const Entry& o) const {
        double s = 0.0;
        for (std::size_t t = 0; t < ls.size(); ++t) {
            const double diff = ls[t] / n - o.ls[t] / o.n;
            s += diff * diff;
        }
        return s;
    }
};

struct Node {
    std::vector<Entry> entries;
    bool leaf = true;
};

class CfTree {
public:
    CfTree(std::size_t dim, std::size_t branching, double threshold)
        : dim_(dim), branching_(branching), threshold_sq_(threshold * threshold) {
        nodes_.push_back(Node{});
        root_ = 0;
    }

    /// Inserts a point and returns the leaf entry id it joined.
    int insert(std::span<const double> x) {
        Entry e;
        e.n = 1.0;
        e.ls.assign(x.begin(), x.end());
        for (double v : x) e.ss += v * v;
        joined_ = -1;
        if (insert_into(root_, std::move(e))) {
            auto [a, b] = split(root_);
            Node root;
            root.leaf = false;
            root.entries.push_back(std::move(a));
            root.entries.push_back(std::move(b));
            nodes_.push_back(std::move(root));
            root_ = static_cast<int>(nodes_.size()) - 1;
        }
        return joined_;
    }

private:
    bool insert_into(int node_index, Entry e) {
        auto& entries = nodes_[static_cast<std::size_t>(node_index)].entries;
        if (entries.empty()) {
            e.leaf_id = next_leaf_id_++;
            joined_ = e.leaf_id;
            entries.push_back(std::move(e));
            return false;
        }
        std::size_t closest = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const double v = entries[i].centroid_sq_dist(e);
            if (v < best) {
                best = v;
                closest = i;
            }
        }
        if (entries[closest].child >= 0) {
            const int child = entries[closest].child;
            const Entry copy = e;
            const bool child_split = insert_into(child, std::move(e));
            if (!child_split) {
                nodes_[static_cast<std::size_t>(node_index)].entries[closest].absorb(copy);
                return false;
            }
            auto [a, b] = split(child);
            auto& here = nodes_[static_cast<std::size_t>(node_index)].entries;
            here[closest] = std::move(a);
            here.push_back(std::move(b));
            return here.size() > branching_;
        }
        // Leaf: join the closest entry if the merged radius stays in bounds.
        Entry merged = entries[closest];
        merged.absorb(e);
        double centroid_sq = 0.0;
        for (double v : merged.ls) centroid_sq += (v / merged.n) * (v / merged.n);
        const double radius_sq = merged.ss / merged.n - centroid_sq;
        if (radius_sq <= threshold_sq_) {
            joined_ = entries[closest].leaf_id;
            entries[closest] = std::move(merged);
            return false;
        }
        e.leaf_id = next_leaf_id_++;
        joined_ = e.leaf_id;
        entries.push_back(std::move(e));
        return entries.size() > branching_;
    }

    /// Splits a node around its two farthest entries; returns the two parent
    /// entries describing the halves. The first half reuses the node's slot.
    std::pair<Entry, Entry> split(int node_index) {
        Node old = std::move(nodes_[static_cast<std::size_t>(node_index)]);
        const std::size_t m = old.entries.size();
        std::size_t fa = 0, fb = 0;
        double far = -1.0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const double v = old.entries[i].centroid_sq_dist(old.entries[j]);
                if (v > far) {
                    far = v;
                    fa = i;
                    fb = j;
                }
            }
        }
        Node first, second;
        first.leaf = second.leaf = old.leaf;
        std::vector<char> to_first(m);
        for (std::size_t i = 0; i < m; ++i) {
            to_first[i] = i == fa || (i != fb && old.entries[i].centroid_sq_dist(old.entries[fa]) <
                                                     old.entries[i].centroid_sq_dist(old.entries[fb]));
        }
        for (std::size_t i = 0; i < m; ++i) {
            (to_first[i] ? first : second).entries.push_back(std::move(old.entries[i]));
        }
        nodes_[static_cast<std::size_t>(node_index)] = std::move(first);
        nodes_.push_back(std::move(second));
        const int second_index = static_cast<int>(nodes_.size()) - 1;
        return {summary(node_index), summary(second_index)};
    }

    Entry summary(int node_index) const {
        Entry s;
        s.ls.assign(dim_, 0.0);
        for (const auto& e : nodes_[static_cast<std::size_t>(node_index)].entries) s.absorb(e);
        s.child = node_index;
        return s;
    }

    std::size_t dim_;
    std::size_t branching_;
    double threshold_sq_;
    std::vector<Node> nodes_;
    int root_ = 0;
    int next_leaf_id_ = 0;
    int joined_ = -1;
};

}  // namespace

std::vector<std::size_t> birch_subclusters(std::span<const std::vector<double>> x, int branching, double threshold) {
    if (x.empty()) throw EmptyInput("birch on no vectors");
    if (branching < 2) throw InvalidParameter("birch: branching must be >= 2");
    if (!(threshold > 0.0)) throw InvalidParameter("birch: threshold must be > 0");
    CfTree tree(x[0].size(), static_cast<std::size_t>(branching), threshold);
    std::vector<std::size_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].size() != x[0].size()) throw LengthMismatch("birch vectors differ in dimension");
        out[i] = static_cast<std::size_t>(tree.insert(x[i]));
    }
    return out;
}

BirchResult birch(std::span<const std::vector<double>> x, int k, int branching, double threshold) {
    const std::size_t n = x.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw InvalidParameter("birch: k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    }
    const std::size_t dim = n ? x[0].size() : 0;
    for (int reduction = 0; reduction <= 10; ++reduction) {
        const auto member = birch_subclusters(x, branching, threshold);
        std::size_t m = 0;
        for (auto s : member) m = std::max(m, s + 1);
        if (m < static_cast<std::size_t>(k)) {
            threshold /= 10.0;
            continue;
        }
        // Subcluster centroids and sizes.
        std::vector<std::vector<double>> centroid(m, std::vector<double>(dim, 0.0));
        std::vector<double> weight(m, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t t = 0; t < dim; ++t) centroid[member[i]][t] += x[i][t];
            weight[member[i]] += 1.0;
        }
        for (std::size_t s = 0; s < m; ++s)
            for (auto& v : centroid[s]) v /= weight[s];
        // Ward distance between weighted centroids.
        std::vector<double> full(m * m, 0.0);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                double sq = 0.0;
                for (std::size_t t = 0; t < dim; ++t) {
                    const double diff = centroid[a][t] - centroid[b][t];
                    sq += diff * diff;
                }
                const double v = std::sqrt(2.0 * weight[a] * weight[b] / (weight[a] + weight[b]) * sq);
                full[a * m + b] = full[b * m + a] = v;
            }
        }
        const Partition groups = hac_full(std::move(full), m, Linkage::Ward, k, weight);
        std::vector<int> raw(n);
        for (std::size_t i = 0; i < n; ++i) raw[i] = groups.assignments[member[i]];
        BirchResult out;
        out.partition = make_partition(raw, k);
        out.threshold = threshold;
        out.subclusters = m;
        return out;
    }
    throw ThresholdUnderflow("birch produced fewer than " + std::to_string(k) +
                             " subclusters after 10 threshold reductions");
}

}  // namespace dlpbench
