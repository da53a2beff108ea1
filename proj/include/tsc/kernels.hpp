#pragma once

#include "tsc/types.hpp"

#include <optional>

namespace tsc {

enum class KernelFamily { Linear, Polynomial, Gaussian, Laplacian };

const char* to_string(KernelFamily f);
KernelFamily kernel_family_from_string(const std::string& name);

struct KernelSpec {
  KernelFamily family = KernelFamily::Linear;
  int degree = 2;                    // Polynomial only
  double offset = 1.0;               // Polynomial only
  std::optional<double> bandwidth;   // Gaussian/Laplacian; empty = median heuristic

  void validate() const;
};

/// Pairwise kernel evaluations K[i,j] = kernel(x_i, x_j), symmetrized exactly
/// via (K + K^T)/2.  Gaussian uses exp(-||xi-xj||_2^2 / (2 sigma^2)), Laplacian
/// exp(-||xi-xj||_1 / sigma); an unset bandwidth resolves to the median pairwise
/// distance (Euclidean resp. l1) over all i < j.
Matrix gram_matrix(const DataMatrix& x, const KernelSpec& spec);

/// Median of pairwise distances over i < j (Euclidean, or l1 when `l1` is set).
double median_pairwise_distance(const DataMatrix& x, bool l1);

}  // namespace tsc
