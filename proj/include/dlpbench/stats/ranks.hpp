#pragma once

#include <vector>

namespace dlpbench {

/// scores[m][d]: score of method m on dataset d; higher is better.
using ScoreTable = std::vector<std::vector<double>>;

/// Per-dataset ranks (1 = best) with ties sharing their average rank.
/// Throws MissingCells on ragged rows or NaN cells.
ScoreTable rank_table(const ScoreTable& scores);

/// Mean of each method's ranks across datasets.
std::vector<double> mean_ranks(const ScoreTable& scores);

}  // namespace dlpbench
