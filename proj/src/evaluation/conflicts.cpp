#include "dlpbench/evaluation/conflicts.hpp"

#include "dlpbench/core/errors.hpp"

namespace dlpbench {

ConflictMass confusion_by_conflict(const std::vector<std::vector<double>>& confusion, const ConflictMap& map) {
    const std::size_t n = map.clusters();
    if (confusion.size() != n) {
        throw LengthMismatch("confusion matrix has " + std::to_string(confusion.size()) + " rows, conflict map " +
                             std::to_string(n) + " clusters");
    }
    ConflictMass out;
    for (std::size_t t = 0; t < n; ++t) {
        if (confusion[t].size() != n) throw LengthMismatch("confusion matrix is not square");
        for (std::size_t p = 0; p < n; ++p) {
            const double mass = confusion[t][p];
            if (t == p || mass == 0.0) continue;
            out.total += mass;
            const auto tags = map.tags(static_cast<int>(t), static_cast<int>(p));
            if (tags.empty()) out.untagged += mass;
            for (auto tag : tags) out.per_tag[static_cast<std::size_t>(tag)] += mass;
        }
    }
    return out;
}

}  // namespace dlpbench
