#include "tsc/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <random>

namespace tsc {

AffinityMatrix::AffinityMatrix(Matrix m) : values(std::move(m)) {
  if (values.rows() != values.cols())
    throw invalid_input("AffinityMatrix: matrix must be square");
  if (!values.allFinite()) throw invalid_input("AffinityMatrix: non-finite entries");
  for (Index i = 0; i < values.rows(); ++i)
    for (Index j = i; j < values.cols(); ++j) {
      if (values(i, j) != values(j, i))
        throw invalid_input("AffinityMatrix: matrix must be exactly symmetric");
      if (values(i, j) < 0.0)
        throw invalid_input("AffinityMatrix: entries must be nonnegative");
    }
}

AffinityMatrix affinity_abs(const SubspaceCoeffs& c) {
  return AffinityMatrix(c.values.cwiseAbs() + c.values.transpose().cwiseAbs());
}

AffinityMatrix affinity_llmc(const SubspaceCoeffs& c) {
  const Matrix pre = c.values + c.values.transpose() - c.values.transpose() * c.values;
  Matrix a = 0.5 * (pre + pre.transpose());
  a = a.cwiseMax(0.0);
  return AffinityMatrix(std::move(a));
}

AffinityMatrix affinity_lrr(const SubspaceCoeffs& c) {
  Eigen::BDCSVD<Matrix> svd(c.values, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const double cutoff =
      s.size() > 0 ? s(0) * std::numeric_limits<double>::epsilon() * c.size() : 0.0;
  Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  if (rank == 0) return AffinityMatrix(Matrix::Zero(c.size(), c.size()));

  Matrix scaled = svd.matrixU().leftCols(rank);
  for (Index j = 0; j < rank; ++j) scaled.col(j) *= std::sqrt(s(j));
  for (Index i = 0; i < scaled.rows(); ++i) {
    const double norm = scaled.row(i).norm();
    if (norm > 0.0) scaled.row(i) /= norm;
  }
  Matrix p = scaled * scaled.transpose();
  p = 0.5 * (p + p.transpose());
  return AffinityMatrix(p.cwiseProduct(p));
}

namespace detail {

namespace {

int nearest_centroid(const Matrix& points, const Matrix& centroids, Index i, double* dist2) {
  int best = 0;
  double best_d = (points.row(i) - centroids.row(0)).squaredNorm();
  for (int j = 1; j < centroids.rows(); ++j) {
    const double d = (points.row(i) - centroids.row(j)).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  if (dist2) *dist2 = best_d;
  return best;
}

}  // namespace

LloydRun lloyd_once(const Matrix& points, int k, std::uint64_t seed) {
  const Index n = points.rows();
  std::mt19937_64 eng(seed);
  auto pick_uniform = [&]() {
    return std::uniform_int_distribution<Index>(0, n - 1)(eng);
  };

  // k-means++ seeding
  Matrix centroids(k, points.cols());
  centroids.row(0) = points.row(pick_uniform());
  Vector d2 = (points.rowwise() - centroids.row(0)).rowwise().squaredNorm();
  for (int j = 1; j < k; ++j) {
    const double total = d2.sum();
    Index pick = n - 1;
    if (total > 0.0) {
      const double target = std::uniform_real_distribution<double>(0.0, 1.0)(eng) * total;
      double acc = 0.0;
      for (Index i = 0; i < n; ++i) {
        acc += d2(i);
        if (acc >= target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = pick_uniform();
    }
    centroids.row(j) = points.row(pick);
    d2 = d2.cwiseMin((points.rowwise() - centroids.row(j)).rowwise().squaredNorm());
  }

  LloydRun run;
  run.labels.assign(n, -1);
  std::vector<int> counts(k, 0);
  int reseed_attempts = 0;

  for (int iter = 0; iter < 300; ++iter) {
    std::vector<int> labels(n);
    std::fill(counts.begin(), counts.end(), 0);
    Vector dists(n);
    for (Index i = 0; i < n; ++i) {
      labels[i] = nearest_centroid(points, centroids, i, &dists(i));
      ++counts[labels[i]];
    }

    // empty clusters: re-seed at the point farthest from its own centroid
    bool reseeded = false;
    for (int j = 0; j < k; ++j) {
      if (counts[j] > 0) continue;
      if (reseed_attempts >= 3) {
        run.degenerate = true;
        continue;
      }
      ++reseed_attempts;
      Index far = 0;
      dists.maxCoeff(&far);
      centroids.row(j) = points.row(far);
      reseeded = true;
    }
    if (reseeded) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Index i = 0; i < n; ++i) {
        labels[i] = nearest_centroid(points, centroids, i, &dists(i));
        ++counts[labels[i]];
      }
      for (int j = 0; j < k; ++j)
        if (counts[j] == 0) run.degenerate = true;
    }

    run.inertia = dists.sum();
    run.inertia_history.push_back(run.inertia);
    const bool stable = labels == run.labels;
    run.labels = std::move(labels);
    if (stable) break;

    Matrix next = Matrix::Zero(k, points.cols());
    for (Index i = 0; i < n; ++i) next.row(run.labels[i]) += points.row(i);
    for (int j = 0; j < k; ++j)
      if (counts[j] > 0)
        centroids.row(j) = next.row(j) / counts[j];
  }
  return run;
}

}  // namespace detail

Labeling kmeans(const Matrix& points, int k, std::uint64_t seed, int restarts) {
  if (k < 1) throw invalid_input("kmeans: k must be positive");
  if (k > points.rows()) throw invalid_input("kmeans: k exceeds the number of points");
  if (restarts < 1) throw invalid_input("kmeans: restarts must be positive");
  if (!points.allFinite()) throw invalid_input("kmeans: non-finite points");

  detail::LloydRun best;
  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    detail::LloydRun run = detail::lloyd_once(points, k, mix_seed(seed, r));
    if (!have || run.inertia < best.inertia) {
      best = std::move(run);
      have = true;
    }
  }
  return Labeling{std::move(best.labels), k, best.degenerate};
}

Labeling normalized_cuts(const AffinityMatrix& a, int k, std::uint64_t seed, int restarts) {
  const Index n = a.values.rows();
  if (k < 2) throw invalid_input("normalized_cuts: k must be at least 2");
  if (k > n) throw invalid_input("normalized_cuts: k exceeds the number of samples");

  const Vector degree = a.values.rowwise().sum();
  const Vector dinv_sqrt = degree.unaryExpr(
      [](double v) { return v > 0.0 ? 1.0 / std::sqrt(v) : 0.0; });

  Matrix lap = -(dinv_sqrt.asDiagonal() * a.values * dinv_sqrt.asDiagonal());
  lap.diagonal().array() += 1.0;
  lap = 0.5 * (lap + lap.transpose());

  Eigen::SelfAdjointEigenSolver<Matrix> es(lap);
  if (es.info() != Eigen::Success)
    throw numeric_error("normalized_cuts: eigensolver failed");

  // A tie across the spectral cut means the embedding choice is arbitrary
  // (e.g. a complete graph); the labeling is then flagged as degenerate.
  const bool ambiguous_cut =
      k < n && std::abs(es.eigenvalues()(k) - es.eigenvalues()(k - 1)) <= 1e-10;

  Matrix embedding = es.eigenvectors().leftCols(k);
  // deterministic orientation: first non-negligible component positive
  for (Index j = 0; j < embedding.cols(); ++j) {
    for (Index i = 0; i < n; ++i) {
      if (std::abs(embedding(i, j)) > 1e-12) {
        if (embedding(i, j) < 0.0) embedding.col(j) = -embedding.col(j);
        break;
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    const double norm = embedding.row(i).norm();
    if (norm > 0.0) embedding.row(i) /= norm;
  }
  Labeling labeling = kmeans(embedding, k, seed, restarts);
  if (ambiguous_cut) labeling.degenerate = true;
  return labeling;
}

}  // namespace tsc
