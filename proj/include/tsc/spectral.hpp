#pragma once

#include "tsc/types.hpp"

#include <cstdint>
#include <vector>

namespace tsc {

/// Symmetric (exactly), entrywise nonnegative graph weights.
struct AffinityMatrix {
  Matrix values;

  AffinityMatrix() = default;
  explicit AffinityMatrix(Matrix m);
};

struct Labeling {
  std::vector<int> labels;
  int k = 0;
  bool degenerate = false;  // empty cluster survived re-seeding
};

/// A = |C| + |C^T|  (the default affinity rule).
AffinityMatrix affinity_abs(const SubspaceCoeffs& c);

/// A = C + C^T - C^T C, symmetrized and clamped at zero.
AffinityMatrix affinity_llmc(const SubspaceCoeffs& c);

/// Scaled-singular-vector rule: with C = U S V^T and Utilde = U_r sqrt(S_r)
/// row-normalized, A = (Utilde Utilde^T) squared elementwise. Optional; not
/// used by any default path.
AffinityMatrix affinity_lrr(const SubspaceCoeffs& c);

/// k-means++ seeding plus Lloyd iterations, best of `restarts` runs by
/// within-cluster sum of squares. Points are rows. Deterministic under seed.
Labeling kmeans(const Matrix& points, int k, std::uint64_t seed, int restarts);

/// Normalized-cuts spectral clustering: symmetric normalized Laplacian,
/// k smallest eigenvectors, row-normalized embedding, k-means back-end.
Labeling normalized_cuts(const AffinityMatrix& a, int k, std::uint64_t seed, int restarts);

namespace detail {

struct LloydRun {
  std::vector<int> labels;
  double inertia = 0.0;
  std::vector<double> inertia_history;
  bool degenerate = false;
};

LloydRun lloyd_once(const Matrix& points, int k, std::uint64_t seed);

}  // namespace detail

}  // namespace tsc
