#include "tsc/subspace.hpp"

#include "tsc/transform.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <random>

namespace tsc {

SubspaceCoeffs update_c_llmc(const CoeffMatrix& z) {
  const Index n = z.values.cols();
  if (n < 3) throw invalid_input("update_c_llmc: need at least 3 samples");
  if (!z.values.allFinite()) throw invalid_input("update_c_llmc: non-finite coefficients");

  const Index d = z.values.rows();
  Matrix c = Matrix::Zero(n, n);
  Matrix reduced(d, n - 1);
  for (Index i = 0; i < n; ++i) {
    reduced.leftCols(i) = z.values.leftCols(i);
    reduced.rightCols(n - 1 - i) = z.values.rightCols(n - 1 - i);
    // minimum-norm least squares, well defined for any rank
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(reduced);
    const Vector ci = cod.solve(z.values.col(i));
    for (Index j = 0; j < n - 1; ++j) c(j < i ? j : j + 1, i) = ci(j);
  }
  return SubspaceCoeffs(std::move(c));
}

namespace {

// Shared proximal-gradient skeleton for the two regularized C-subproblems.
// `prox` maps the gradient-stepped matrix to the next iterate (threshold per
// entry or per singular value); the diagonal is zeroed afterwards.
template <typename Prox, typename Reg>
SubspaceCoeffs prox_gradient_c(const CoeffMatrix& z, int max_iters, double tol,
                               const SubspaceCoeffs* warm, Prox prox, Reg reg_value) {
  const Index n = z.values.cols();
  if (warm && warm->size() != n) throw invalid_input("C update: warm start size mismatch");
  if (!z.values.allFinite()) throw invalid_input("C update: non-finite coefficients");
  if (max_iters < 1) throw invalid_input("C update: iteration budget must be >= 1");

  const Matrix ztz = z.values.transpose() * z.values;
  Eigen::SelfAdjointEigenSolver<Matrix> es(ztz, Eigen::EigenvaluesOnly);
  const double lip = es.eigenvalues().maxCoeff();
  if (!(lip > 0.0)) return SubspaceCoeffs::zero(n);  // Z == 0: C = 0 is optimal

  Matrix c = warm ? warm->values : Matrix::Zero(n, n);
  const auto objective = [&](const Matrix& cc) {
    return (z.values - z.values * cc).squaredNorm() + reg_value(cc);
  };

  double prev = objective(c);
  // The diagonal projection can transiently raise the objective (it is only a
  // heuristic for the nuclear-norm prox), so the returned iterate is the best
  // one seen; that keeps the result no worse than the warm start.
  Matrix best = c;
  double best_value = prev;
  for (int it = 0; it < max_iters; ++it) {
    Matrix cand = prox(c - (ztz * c - ztz) / lip, lip);
    cand.diagonal().setZero();
    const double cur = objective(cand);
    c = std::move(cand);
    if (cur < best_value) {
      best_value = cur;
      best = c;
    }
    if (std::abs(prev - cur) <= tol * std::max(1.0, std::abs(prev))) break;
    prev = cur;
  }
  return SubspaceCoeffs(std::move(best));
}

}  // namespace

SubspaceCoeffs update_c_ssc(const CoeffMatrix& z, double mu_c, int max_iters, double tol,
                            const SubspaceCoeffs* warm) {
  if (!(mu_c > 0.0)) throw invalid_input("update_c_ssc: mu_c must be positive");
  return prox_gradient_c(
      z, max_iters, tol, warm,
      [mu_c](const Matrix& m, double lip) { return soft_threshold(m, mu_c / (2.0 * lip)); },
      [mu_c](const Matrix& cc) { return mu_c * cc.cwiseAbs().sum(); });
}

Matrix svt(const Matrix& m, double tau) {
  if (!(tau >= 0.0)) throw invalid_input("svt: tau must be nonnegative");
  if (!m.allFinite()) throw numeric_error("svt: non-finite input");
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vector s = svd.singularValues();
  for (Index i = 0; i < s.size(); ++i) s(i) = std::max(s(i) - tau, 0.0);
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
}

SubspaceCoeffs update_c_lrr(const CoeffMatrix& z, double mu_c, int max_iters, double tol,
                            const SubspaceCoeffs* warm) {
  if (!(mu_c > 0.0)) throw invalid_input("update_c_lrr: mu_c must be positive");
  return prox_gradient_c(
      z, max_iters, tol, warm,
      [mu_c](const Matrix& m, double lip) { return svt(m, mu_c / (2.0 * lip)); },
      [mu_c](const Matrix& cc) {
        return mu_c * Eigen::BDCSVD<Matrix>(cc).singularValues().sum();
      });
}

namespace {

Matrix initial_transform(Index d, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix t = Matrix::Identity(d, d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) t(i, j) += 1e-3 * gauss(eng);
  return t;
}

SubspaceCoeffs variant_c_update(const CoeffMatrix& z, Variant variant, const Hyperparams& hp,
                                const SubspaceCoeffs& warm) {
  if (hp.gamma == 0.0) return SubspaceCoeffs::zero(z.values.cols());
  if (variant == Variant::TLLMC || hp.mu_c == 0.0) return update_c_llmc(z);
  // weight of the subproblem min gamma ||Z - ZC||^2 + mu_c R(C)
  const double weight = hp.mu_c / hp.gamma;
  if (variant == Variant::TSSC)
    return update_c_ssc(z, weight, hp.inner_iters, hp.inner_tol, &warm);
  return update_c_lrr(z, weight, hp.inner_iters, hp.inner_tol, &warm);
}

}  // namespace

TscModel fit(const DataMatrix& x, Variant variant, const Hyperparams& hp,
             const std::optional<KernelSpec>& kernel, std::uint64_t seed) {
  hp.validate();
  if (x.samples() < 3) throw invalid_input("fit: need at least 3 samples");

  const DataMatrix effective = kernel ? DataMatrix(gram_matrix(x, *kernel)) : x;
  const Index d = effective.dim();
  const Index n = effective.samples();

  Transform t{initial_transform(d, seed)};
  CoeffMatrix z{soft_threshold(t.values * effective.values, hp.mu / 2.0)};
  SubspaceCoeffs c = SubspaceCoeffs::zero(n);

  const double j0 = joint_objective(t, effective, z, c, hp, variant);
  if (!std::isfinite(j0) || !(j0 > 0.0))
    throw numeric_error("fit: initial objective is not a positive finite value");

  std::vector<TracePoint> trace{{0, 1.0}};
  double prev = j0;
  for (int it = 1; it <= hp.max_outer_iters; ++it) {
    c = variant_c_update(z, variant, hp, c);
    z = update_z(t, effective, c, hp, &z);
    t = update_transform(effective, z, hp.lambda);
    const double cur = joint_objective(t, effective, z, c, hp, variant);
    trace.push_back({it, cur / j0});
    if (std::abs(prev - cur) <= hp.tol_rel * std::max(std::abs(prev), 1e-300)) break;
    prev = cur;
  }
  return TscModel{std::move(t), std::move(z), std::move(c),
                  variant,      hp,           std::move(trace), kernel};
}

TscModel fit_piecemeal(const DataMatrix& x, Variant variant, const Hyperparams& hp,
                       std::uint64_t seed) {
  hp.validate();
  if (x.samples() < 3) throw invalid_input("fit_piecemeal: need at least 3 samples");

  const Index d = x.dim();
  const Index n = x.samples();
  Transform t{initial_transform(d, seed)};
  CoeffMatrix z{soft_threshold(t.values * x.values, hp.mu / 2.0)};
  SubspaceCoeffs c = SubspaceCoeffs::zero(n);

  Hyperparams tl = hp;
  tl.gamma = 0.0;
  const double j0 = joint_objective(t, x, z, c, tl, variant);
  if (!std::isfinite(j0) || !(j0 > 0.0))
    throw numeric_error("fit_piecemeal: initial objective is not a positive finite value");

  std::vector<TracePoint> trace{{0, 1.0}};
  double prev = j0;
  for (int it = 1; it <= hp.max_outer_iters; ++it) {
    z = CoeffMatrix{soft_threshold(t.values * x.values, hp.mu / 2.0)};
    t = update_transform(x, z, hp.lambda);
    const double cur = joint_objective(t, x, z, c, tl, variant);
    trace.push_back({it, cur / j0});
    if (std::abs(prev - cur) <= hp.tol_rel * std::max(std::abs(prev), 1e-300)) break;
    prev = cur;
  }

  // one C pass on the frozen coefficients
  if (variant == Variant::TLLMC || hp.mu_c == 0.0) {
    c = update_c_llmc(z);
  } else if (variant == Variant::TSSC) {
    c = update_c_ssc(z, hp.mu_c, hp.inner_iters, hp.inner_tol);
  } else {
    c = update_c_lrr(z, hp.mu_c, hp.inner_iters, hp.inner_tol);
  }
  return TscModel{std::move(t), std::move(z), std::move(c),
                  variant,      hp,           std::move(trace), std::nullopt};
}

}  // namespace tsc
