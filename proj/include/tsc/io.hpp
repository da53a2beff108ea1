#pragma once

#include "tsc/spectral.hpp"
#include "tsc/subspace.hpp"
#include "tsc/types.hpp"

#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

namespace tsc {

/// CSV, one sample per row, no header; transposed to columns in memory.
DataMatrix load_matrix_csv(const std::filesystem::path& path);

/// One nonnegative integer per line.
Labeling load_labels(const std::filesystem::path& path);

/// Companion labels location: same path with the extension replaced by ".labels".
std::filesystem::path labels_path_for(const std::filesystem::path& data_path);

/// Loads the matrix plus the companion labels file when it exists.
std::pair<DataMatrix, std::optional<Labeling>> load_dataset(const std::filesystem::path& path);

void save_matrix_csv(const std::filesystem::path& path, const DataMatrix& x);
void save_labels(const std::filesystem::path& path, const Labeling& labels);
void save_trace_csv(const std::filesystem::path& path, const std::vector<TracePoint>& trace);

}  // namespace tsc
