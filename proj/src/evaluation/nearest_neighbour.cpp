#include "dlpbench/evaluation/nearest_neighbour.hpp"

#include <limits>

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

NnResult loo_1nn(const DissimilarityMatrix& d, std::span<const int> labels) {
    const std::size_t n = d.size();
    if (labels.size() != n) throw LengthMismatch("matrix has " + std::to_string(n) + " rows, labels " +
                                                 std::to_string(labels.size()));
    if (n < 2) throw EmptyInput("leave-one-out 1NN needs at least two series");
    for (int l : labels) {
        if (l < 0) throw InvariantViolation("loo_1nn received an outlier label; filter outliers first");
    }
    NnResult out;
    out.predictions.resize(n);
    std::map<int, std::pair<std::size_t, std::size_t>> tally;  // label -> (correct, total)
    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double v = d(i, j);
            if (v < best_d || best == n) {
                best_d = v;
                best = j;
            }
        }
        out.predictions[i] = labels[best];
        const bool hit = labels[best] == labels[i];
        correct += hit;
        auto& t = tally[labels[i]];
        t.first += hit;
        ++t.second;
    }
    out.overall = static_cast<double>(correct) / static_cast<double>(n);
    for (const auto& [label, t] : tally) {
        out.per_cluster[label] = static_cast<double>(t.first) / static_cast<double>(t.second);
    }
    return out;
}

std::vector<std::vector<double>> confusion_matrix(std::span<const int> truth, std::span<const int> predicted,
                                                  int num_labels) {
    if (truth.size() != predicted.size()) throw LengthMismatch("confusion matrix inputs differ in length");
    std::vector<std::vector<double>> counts(static_cast<std::size_t>(num_labels),
                                            std::vector<double>(static_cast<std::size_t>(num_labels), 0.0));
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] < 0 || truth[i] >= num_labels || predicted[i] < 0 || predicted[i] >= num_labels) {
            throw InvariantViolation("label outside [0, " + std::to_string(num_labels) + ") at " + std::to_string(i));
        }
        counts[static_cast<std::size_t>(truth[i])][static_cast<std::size_t>(predicted[i])] += 1.0;
    }
    return counts;
}

}  // namespace dlpbench
