#pragma once

#include <array>
#include <vector>

#include "dlpbench/synthgen/conflict_map.hpp"

namespace dlpbench {

/// Off-diagonal confusion mass split by the conflict tags of each cluster
/// pair. A pair with several tags contributes its full mass to every one of
/// them, so per_tag can sum to more than total.
struct ConflictMass {
    /// Indexed by ConflictTag.
    std::array<double, kConflictTagCount> per_tag{};
    /// Mass on pairs that carry no tag.
    double untagged = 0.0;
    /// Total off-diagonal mass, each confusion counted once.
    double total = 0.0;
};

/// confusion[t][p] as returned by confusion_matrix; must be square with the
/// map's cluster count (LengthMismatch otherwise).
ConflictMass confusion_by_conflict(const std::vector<std::vector<double>>& confusion, const ConflictMap& map);

}  // namespace dlpbench
