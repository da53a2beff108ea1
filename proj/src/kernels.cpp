#include "tsc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tsc {

const char* to_string(KernelFamily f) {
  switch (f) {
    case KernelFamily::Linear: return "linear";
    case KernelFamily::Polynomial: return "polynomial";
    case KernelFamily::Gaussian: return "gaussian";
    case KernelFamily::Laplacian: return "laplacian";
  }
  return "?";
}

KernelFamily kernel_family_from_string(const std::string& name) {
  if (name == "linear") return KernelFamily::Linear;
  if (name == "polynomial" || name == "poly") return KernelFamily::Polynomial;
  if (name == "gaussian" || name == "rbf") return KernelFamily::Gaussian;
  if (name == "laplacian") return KernelFamily::Laplacian;
  throw invalid_input("unknown kernel family: " + name);
}

void KernelSpec::validate() const {
  if (family == KernelFamily::Polynomial && degree < 1)
    throw invalid_input("KernelSpec: polynomial degree must be positive");
  if (bandwidth && !(*bandwidth > 0.0))
    throw invalid_input("KernelSpec: bandwidth must be positive");
}

double median_pairwise_distance(const DataMatrix& x, bool l1) {
  const Index n = x.samples();
  std::vector<double> dist;
  dist.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      const auto diff = x.values.col(i) - x.values.col(j);
      dist.push_back(l1 ? diff.cwiseAbs().sum() : diff.norm());
    }
  std::sort(dist.begin(), dist.end());
  const std::size_t m = dist.size();
  return m % 2 == 1 ? dist[m / 2] : 0.5 * (dist[m / 2 - 1] + dist[m / 2]);
}

Matrix gram_matrix(const DataMatrix& x, const KernelSpec& spec) {
  spec.validate();
  const Index n = x.samples();
  Matrix k(n, n);

  switch (spec.family) {
    case KernelFamily::Linear:
      k = x.values.transpose() * x.values;
      break;
    case KernelFamily::Polynomial: {
      const Matrix xtx = x.values.transpose() * x.values;
      const int degree = spec.degree;
      const double offset = spec.offset;
      k = xtx.unaryExpr([degree, offset](double v) {
        return std::pow(v + offset, degree);
      });
      break;
    }
    case KernelFamily::Gaussian: {
      const double sigma =
          spec.bandwidth ? *spec.bandwidth : median_pairwise_distance(x, false);
      if (!(sigma > 0.0)) throw invalid_input("gram_matrix: bandwidth must be positive");
      const Vector sq = x.values.colwise().squaredNorm();
      Matrix d2 = (-2.0 * (x.values.transpose() * x.values)).colwise() + sq;
      d2.rowwise() += sq.transpose();
      d2 = d2.cwiseMax(0.0);
      k = (-d2 / (2.0 * sigma * sigma)).array().exp();
      break;
    }
    case KernelFamily::Laplacian: {
      const double sigma =
          spec.bandwidth ? *spec.bandwidth : median_pairwise_distance(x, true);
      if (!(sigma > 0.0)) throw invalid_input("gram_matrix: bandwidth must be positive");
      for (Index i = 0; i < n; ++i) {
        k(i, i) = 1.0;
        for (Index j = i + 1; j < n; ++j) {
          const double d1 = (x.values.col(i) - x.values.col(j)).cwiseAbs().sum();
          k(i, j) = k(j, i) = std::exp(-d1 / sigma);
        }
      }
      break;
    }
  }

  k = 0.5 * (k + k.transpose());
  return k;
}

}  // namespace tsc
