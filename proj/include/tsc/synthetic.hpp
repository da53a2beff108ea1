#pragma once

#include "tsc/spectral.hpp"
#include "tsc/types.hpp"

#include <cstdint>
#include <utility>

namespace tsc {

/// Union-of-subspaces benchmark generator: per subspace an orthonormal basis
/// (QR of a seeded Gaussian), Gaussian coefficients, optional ambient noise,
/// each sample rescaled to `sample_norm`.
///
/// Samples of norm ~100 keep the default regularization weights
/// (lambda = mu = 0.1) well inside their useful range; at unit norm the
/// thresholds dominate the coefficients and the solvers collapse to Z = 0.
struct SyntheticSpec {
  int k_subspaces = 3;
  int ambient_dim = 30;
  int subspace_dim = 3;
  int points_per_subspace = 20;
  double noise_sigma = 0.0;
  double sample_norm = 100.0;
  std::uint64_t seed = 0;

  void validate() const;
};

std::pair<DataMatrix, Labeling> generate_synthetic(const SyntheticSpec& spec);

}  // namespace tsc
