#pragma once

#include <vector>

namespace dlpbench {

/// Maximal cliques of an undirected graph given as a symmetric boolean
/// adjacency matrix (the diagonal is ignored), found with Bron-Kerbosch and
/// pivoting. Members of each clique are sorted by `mean_ranks` (then index),
/// and cliques are ordered by their best member's rank, then by size
/// (larger first), then lexicographically. Empty `mean_ranks` sorts by index.
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacency,
                                              const std::vector<double>& mean_ranks = {});

/// Keeps cliques with at least two members and at least one member whose
/// mean rank is <= max_rank (the reporting filter used for figures).
std::vector<std::vector<int>> reportable_cliques(const std::vector<std::vector<int>>& cliques,
                                                 const std::vector<double>& mean_ranks, double max_rank = 20.0);

}  // namespace dlpbench
