#include "tsc/synthetic.hpp"

#include <Eigen/QR>

#include <random>

namespace tsc {

void SyntheticSpec::validate() const {
  if (k_subspaces < 1) throw invalid_input("SyntheticSpec: need at least one subspace");
  if (subspace_dim < 1) throw invalid_input("SyntheticSpec: subspace_dim must be >= 1");
  if (subspace_dim >= ambient_dim)
    throw invalid_input("SyntheticSpec: subspace_dim must be smaller than ambient_dim");
  if (points_per_subspace < 1)
    throw invalid_input("SyntheticSpec: points_per_subspace must be >= 1");
  if (k_subspaces * points_per_subspace < 3)
    throw invalid_input("SyntheticSpec: need at least 3 samples in total");
  if (!(noise_sigma >= 0.0)) throw invalid_input("SyntheticSpec: noise_sigma must be >= 0");
  if (!(sample_norm > 0.0)) throw invalid_input("SyntheticSpec: sample_norm must be positive");
}

std::pair<DataMatrix, Labeling> generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  std::mt19937_64 eng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto randn = [&](Index rows, Index cols) {
    Matrix m(rows, cols);
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i) m(i, j) = gauss(eng);
    return m;
  };

  const Index d = spec.ambient_dim;
  const Index pts = spec.points_per_subspace;
  const Index total = static_cast<Index>(spec.k_subspaces) * pts;
  Matrix x(d, total);
  std::vector<int> labels(total);

  for (int j = 0; j < spec.k_subspaces; ++j) {
    Eigen::HouseholderQR<Matrix> qr(randn(d, spec.subspace_dim));
    const Matrix basis = qr.householderQ() * Matrix::Identity(d, spec.subspace_dim);
    Matrix block = basis * randn(spec.subspace_dim, pts);
    if (spec.noise_sigma > 0.0) block += spec.noise_sigma * randn(d, pts);
    x.middleCols(j * pts, pts) = block;
    std::fill(labels.begin() + j * pts, labels.begin() + (j + 1) * pts, j);
  }

  for (Index c = 0; c < total; ++c) {
    const double norm = x.col(c).norm();
    if (norm > 0.0) x.col(c) *= spec.sample_norm / norm;
  }
  return {DataMatrix(std::move(x)), Labeling{std::move(labels), spec.k_subspaces, false}};
}

}  // namespace tsc
