#include "tsc/transform.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>

namespace tsc {

Matrix soft_threshold(const Matrix& m, double tau) {
  if (!(tau >= 0.0)) throw invalid_input("soft_threshold: tau must be nonnegative");
  if (!m.allFinite()) throw invalid_input("soft_threshold: non-finite input");
  return m.unaryExpr([tau](double v) {
    const double mag = std::abs(v) - tau;
    if (mag <= 0.0) return 0.0;
    return v > 0.0 ? mag : -mag;
  });
}

double log_det_positive(const Matrix& m) {
  Eigen::PartialPivLU<Matrix> lu(m);
  double sign = static_cast<double>(lu.permutationP().determinant());
  double log_abs = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    const double u = lu.matrixLU()(i, i);
    if (u == 0.0 || !std::isfinite(u)) throw numeric_error("log_det: singular matrix");
    if (u < 0.0) sign = -sign;
    log_abs += std::log(std::abs(u));
  }
  if (sign <= 0.0) throw numeric_error("log_det: determinant is not positive");
  return log_abs;
}

Transform update_transform(const DataMatrix& x, const CoeffMatrix& z, double lambda) {
  if (!(lambda > 0.0)) throw invalid_input("update_transform: lambda must be positive");
  if (z.values.rows() != x.values.rows() || z.values.cols() != x.values.cols())
    throw invalid_input("update_transform: coefficient shape does not match data");
  if (!z.values.allFinite()) throw invalid_input("update_transform: non-finite coefficients");

  const Index d = x.values.rows();
  Matrix gram = x.values * x.values.transpose();
  gram.diagonal().array() += lambda;
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success)
    throw numeric_error("update_transform: Cholesky of XX^T + lambda I failed");

  const Matrix m = llt.matrixL().solve(x.values * z.values.transpose());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();

  Vector gains(d);
  for (Index i = 0; i < d; ++i)
    gains(i) = 0.5 * (s(i) + std::sqrt(s(i) * s(i) + 2.0 * lambda));
  // When det(U V^T) < 0 the all-positive gains would give det T < 0; the
  // negative root on the smallest singular value restores det T > 0 and still
  // satisfies the stationarity condition.
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0) {
    const double sd = s(d - 1);
    gains(d - 1) = 0.5 * (sd - std::sqrt(sd * sd + 2.0 * lambda));
  }

  const Matrix core = svd.matrixV() * gains.asDiagonal() * svd.matrixU().transpose();
  // T = core * L^{-1}, via L^T T^T = core^T
  Matrix t = llt.matrixU().solve(core.transpose()).transpose();
  return Transform{std::move(t)};
}

CoeffMatrix update_z(const Transform& t, const DataMatrix& x, const SubspaceCoeffs& c,
                     const Hyperparams& hp, const CoeffMatrix* warm) {
  if (t.values.rows() != t.values.cols() || t.values.cols() != x.values.rows())
    throw invalid_input("update_z: transform shape does not match data");
  if (c.size() != x.values.cols())
    throw invalid_input("update_z: C size does not match sample count");
  if (!t.values.allFinite()) throw invalid_input("update_z: non-finite transform");
  if (!(hp.mu >= 0.0) || !(hp.gamma >= 0.0))
    throw invalid_input("update_z: mu and gamma must be nonnegative");

  const Matrix tx = t.values * x.values;
  if (hp.gamma == 0.0) return CoeffMatrix{soft_threshold(tx, hp.mu / 2.0)};

  const Index n = x.values.cols();
  const Matrix b = Matrix::Identity(n, n) - c.values;
  const Matrix bbt = b * b.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> es(bbt, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw numeric_error("update_z: step size computation failed");
  const double lip = 1.0 + hp.gamma * std::max(es.eigenvalues().maxCoeff(), 0.0);

  Matrix z = warm ? warm->values : soft_threshold(tx, hp.mu / 2.0);
  if (warm && (z.rows() != tx.rows() || z.cols() != tx.cols()))
    throw invalid_input("update_z: warm start shape mismatch");

  const auto objective = [&](const Matrix& zz) {
    return (tx - zz).squaredNorm() + hp.mu * zz.cwiseAbs().sum() +
           hp.gamma * (zz * b).squaredNorm();
  };

  const double thr = hp.mu / (2.0 * lip);
  double prev = objective(z);
  for (int it = 0; it < hp.inner_iters; ++it) {
    const Matrix grad_half = (z - tx) + hp.gamma * (z * bbt);
    z = soft_threshold(z - grad_half / lip, thr);
    const double cur = objective(z);
    if (std::abs(prev - cur) <= hp.inner_tol * std::max(1.0, std::abs(prev))) break;
    prev = cur;
  }
  return CoeffMatrix{std::move(z)};
}

double joint_objective(const Transform& t, const DataMatrix& x, const CoeffMatrix& z,
                       const SubspaceCoeffs& c, const Hyperparams& hp, Variant variant) {
  if (t.values.rows() != t.values.cols() || t.values.cols() != x.values.rows())
    throw invalid_input("joint_objective: transform shape does not match data");
  if (z.values.rows() != t.values.rows() || z.values.cols() != x.values.cols())
    throw invalid_input("joint_objective: coefficient shape mismatch");
  if (c.size() != x.values.cols())
    throw invalid_input("joint_objective: C size does not match sample count");

  const double log_det = log_det_positive(t.values);
  const double fit = (t.values * x.values - z.values).squaredNorm();
  const double reg_t = hp.lambda * (t.values.squaredNorm() - log_det);
  const double l1_z = hp.mu * z.values.cwiseAbs().sum();

  Matrix c0 = c.values;
  c0.diagonal().setZero();
  const double couple = hp.gamma * (z.values - z.values * c0).squaredNorm();

  double reg_c = 0.0;
  if (variant == Variant::TSSC) {
    reg_c = hp.mu_c * c0.cwiseAbs().sum();
  } else if (variant == Variant::TLRR) {
    reg_c = hp.mu_c * Eigen::BDCSVD<Matrix>(c0).singularValues().sum();
  }
  return fit + reg_t + l1_z + couple + reg_c;
}

}  // namespace tsc
