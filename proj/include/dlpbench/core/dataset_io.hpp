#pragma once

#include <filesystem>
#include <string>

#include "dlpbench/core/types.hpp"

namespace dlpbench {

/// Shortest decimal string that round-trips to the same double.
std::string format_number(double value);

/// Path of the JSON sidecar that accompanies a dataset CSV (same stem, .json).
std::filesystem::path sidecar_path(const std::filesystem::path& csv);

/// Writes `id,label,v0,...,v47` rows plus the metadata sidecar.
void write_dataset(const std::filesystem::path& csv, const LabeledDataset& data);

struct ReadOptions {
    /// Re-normalise rows that are not already min-max normalised instead of
    /// rejecting them.
    bool normalize = false;
    /// Required series length (0 accepts any length >= 2).
    std::size_t length = kDlpLength;
};

/// Parses a dataset CSV. Errors name the offending row and column (ParseError)
/// or the violated invariant. Without a sidecar the metadata is inferred:
/// scenario "external" and K = max label + 1.
LabeledDataset read_dataset(const std::filesystem::path& csv, const ReadOptions& options = {});

/// Binary matrix file: 8-byte magic "DLPBDM01", uint64 n, then n*n
/// little-endian doubles in row-major order.
void write_matrix(const std::filesystem::path& path, const DissimilarityMatrix& d);
DissimilarityMatrix read_matrix(const std::filesystem::path& path);

}  // namespace dlpbench
