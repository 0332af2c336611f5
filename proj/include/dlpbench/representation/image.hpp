#pragma once

#include <span>
#include <string>
#include <vector>

#include "dlpbench/core/types.hpp"
#include "dlpbench/representation/binning.hpp"

namespace dlpbench {

enum class GafType { Summation, Difference };

std::string gaf_type_name(GafType t);
GafType parse_gaf_type(const std::string& name);

/// Average-pools a row-major n x n image to n_i x n_i using segment_bounds
/// along both axes.
std::vector<double> average_pool(std::span<const double> image, std::size_t n, std::size_t n_i);

/// Gramian angular field: x is rescaled to [-1, 1] (a constant series maps
/// to 1), phi_t = arccos(x_t), G_ij = cos(phi_i + phi_j) or sin(phi_i - phi_j).
/// The full image is average-pooled to n_i x n_i and flattened row-major.
/// InvalidParameter unless 2 <= n_i <= |x|.
FeatureVector gaf(std::span<const double> x, std::size_t n_i, GafType type);

/// Row-stochastic transition matrix between consecutive symbols (n_b x n_b,
/// row-major). Rows of symbols that never transition stay zero.
std::vector<double> markov_transition_matrix(std::span<const int> symbols, int n_b);

/// Markov transition field M_ij = W[q_i][q_j] for the bins q of x,
/// average-pooled to n_i x n_i and flattened row-major.
FeatureVector mtf(std::span<const double> x, std::size_t n_i, int n_b, BinStrategy strategy);

}  // namespace dlpbench
