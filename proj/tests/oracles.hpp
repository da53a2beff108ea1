// Test-only reference implementations, kept deliberately independent of the
// library code paths they check: plain loops, their own determinants, their
// own long-run solvers.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline Matrix randn(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = gauss(eng);
  return m;
}

inline Matrix soft_scalar_loop(const Matrix& m, double tau) {
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      const double mag = std::abs(v) - tau;
      out(i, j) = mag > 0.0 ? (v > 0.0 ? mag : -mag) : 0.0;
    }
  return out;
}

// log|det| and sign via full-pivot LU, a different route than the library's
// partial-pivot factorization.
inline double signed_log_det(const Matrix& m, double* sign_out) {
  Eigen::FullPivLU<Matrix> lu(m);
  double sign = static_cast<double>(lu.permutationP().determinant()) *
                static_cast<double>(lu.permutationQ().determinant());
  double log_abs = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double u = lu.matrixLU()(i, i);
    if (u == 0.0) {
      *sign_out = 0.0;
      return -std::numeric_limits<double>::infinity();
    }
    if (u < 0.0) sign = -sign;
    log_abs += std::log(std::abs(u));
  }
  *sign_out = sign;
  return log_abs;
}

// P1 objective ||TX - Z||^2 + lambda(||T||^2 - log det T); +inf outside det > 0.
inline double p1_objective(const Matrix& t, const Matrix& x, const Matrix& z, double lambda) {
  double sign = 0.0;
  const double log_det = signed_log_det(t, &sign);
  if (sign <= 0.0) return std::numeric_limits<double>::infinity();
  return (t * x - z).squaredNorm() + lambda * (t.squaredNorm() - log_det);
}

inline Matrix p1_gradient(const Matrix& t, const Matrix& x, const Matrix& z, double lambda) {
  return 2.0 * (t * x - z) * x.transpose() + 2.0 * lambda * t -
         lambda * t.inverse().transpose();
}

// Gradient descent with backtracking on the P1 objective. Independent
// numerical minimizer used to cross-check the closed form.
inline Matrix p1_minimize(const Matrix& x, const Matrix& z, double lambda, Matrix t,
                          int iters = 20000, double tol = 1e-13) {
  double step = 1e-2;
  double value = p1_objective(t, x, z, lambda);
  for (int it = 0; it < iters; ++it) {
    const Matrix grad = p1_gradient(t, x, z, lambda);
    double trial_step = step * 2.0;
    for (int back = 0; back < 60; ++back) {
      const Matrix cand = t - trial_step * grad;
      const double cand_value = p1_objective(cand, x, z, lambda);
      if (cand_value < value) {
        t = cand;
        value = cand_value;
        step = trial_step;
        break;
      }
      trial_step *= 0.5;
    }
    if (grad.norm() <= tol * (1.0 + t.norm())) break;
  }
  return t;
}

// Long-run ISTA for min ||TX - Z||^2 + mu ||Z||_1 + gamma ||Z (I-C)||^2.
inline Matrix z_ista_long(const Matrix& tx, const Matrix& c, double mu, double gamma,
                          long iters) {
  const Eigen::Index n = tx.cols();
  const Matrix b = Matrix::Identity(n, n) - c;
  const Matrix bbt = b * b.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> es(bbt, Eigen::EigenvaluesOnly);
  const double lip = 1.0 + gamma * es.eigenvalues().maxCoeff();
  Matrix z = Matrix::Zero(tx.rows(), tx.cols());
  for (long it = 0; it < iters; ++it) {
    const Matrix grad_half = (z - tx) + gamma * (z * bbt);
    z = soft_scalar_loop(z - grad_half / lip, mu / (2.0 * lip));
  }
  return z;
}

inline double z_objective(const Matrix& tx, const Matrix& z, const Matrix& c, double mu,
                          double gamma) {
  const Matrix b = Matrix::Identity(tx.cols(), tx.cols()) - c;
  return (tx - z).squaredNorm() + mu * z.cwiseAbs().sum() + gamma * (z * b).squaredNorm();
}

// Long-run ISTA for min ||Z - ZC||^2 + mu_c ||C||_1 with a zero diagonal.
inline Matrix c_ssc_long(const Matrix& z, double mu_c, long iters) {
  const Eigen::Index n = z.cols();
  const Matrix ztz = z.transpose() * z;
  Eigen::SelfAdjointEigenSolver<Matrix> es(ztz, Eigen::EigenvaluesOnly);
  const double lip = es.eigenvalues().maxCoeff();
  Matrix c = Matrix::Zero(n, n);
  for (long it = 0; it < iters; ++it) {
    c = soft_scalar_loop(c - (ztz * c - ztz) / lip, mu_c / (2.0 * lip));
    c.diagonal().setZero();
  }
  return c;
}

inline double c_ssc_objective(const Matrix& z, const Matrix& c, double mu_c) {
  return (z - z * c).squaredNorm() + mu_c * c.cwiseAbs().sum();
}

inline Matrix svt_jacobi(const Matrix& m, double tau) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vector s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = std::max(s(i) - tau, 0.0);
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
}

// Long-run proximal gradient for min ||Z - ZC||^2 + mu_c ||C||_* (zero diag).
inline Matrix c_lrr_long(const Matrix& z, double mu_c, long iters) {
  const Eigen::Index n = z.cols();
  const Matrix ztz = z.transpose() * z;
  Eigen::SelfAdjointEigenSolver<Matrix> es(ztz, Eigen::EigenvaluesOnly);
  const double lip = es.eigenvalues().maxCoeff();
  Matrix c = Matrix::Zero(n, n);
  for (long it = 0; it < iters; ++it) {
    c = svt_jacobi(c - (ztz * c - ztz) / lip, mu_c / (2.0 * lip));
    c.diagonal().setZero();
  }
  return c;
}

inline double nuclear_norm(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m).singularValues().sum();
}

inline double c_lrr_objective(const Matrix& z, const Matrix& c, double mu_c) {
  return (z - z * c).squaredNorm() + mu_c * nuclear_norm(c);
}

// Dense least squares via hand-rolled normal equations + Gaussian elimination
// (full-rank systems only).
inline Vector normal_equations_solve(const Matrix& a, const Vector& b) {
  const Eigen::Index n = a.cols();
  Matrix lhs = a.transpose() * a;
  Vector rhs = a.transpose() * b;
  // Gaussian elimination with partial pivoting
  Matrix m = lhs;
  Vector v = rhs;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index row = col + 1; row < n; ++row)
      if (std::abs(m(row, col)) > std::abs(m(pivot, col))) pivot = row;
    m.row(col).swap(m.row(pivot));
    std::swap(v(col), v(pivot));
    for (Eigen::Index row = col + 1; row < n; ++row) {
      const double f = m(row, col) / m(col, col);
      m.row(row) -= f * m.row(col);
      v(row) -= f * v(col);
    }
  }
  Vector xsol(n);
  for (Eigen::Index row = n - 1; row >= 0; --row) {
    double acc = v(row);
    for (Eigen::Index col = row + 1; col < n; ++col) acc -= m(row, col) * xsol(col);
    xsol(row) = acc / m(row, row);
  }
  return xsol;
}

// Pairwise kernel evaluations with scalar loops.
inline double kernel_scalar(const Vector& a, const Vector& b, const std::string& family,
                            int degree, double offset, double sigma) {
  if (family == "linear") return a.dot(b);
  if (family == "polynomial") return std::pow(a.dot(b) + offset, degree);
  if (family == "gaussian") {
    double d2 = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) d2 += (a(i) - b(i)) * (a(i) - b(i));
    return std::exp(-d2 / (2.0 * sigma * sigma));
  }
  double d1 = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) d1 += std::abs(a(i) - b(i));
  return std::exp(-d1 / sigma);
}

// ---- clustering-metric oracles ------------------------------------------

// Brute force over all injective cluster->class assignments.
inline long long best_assignment_bruteforce(const Eigen::MatrixXi& counts) {
  const int r = static_cast<int>(counts.rows());
  const int q = static_cast<int>(counts.cols());
  const int m = std::max(r, q);
  std::vector<int> cols(m);
  std::iota(cols.begin(), cols.end(), 0);
  long long best = 0;
  do {
    long long sum = 0;
    for (int i = 0; i < m; ++i)
      if (i < r && cols[i] < q) sum += counts(i, cols[i]);
    best = std::max(best, sum);
  } while (std::next_permutation(cols.begin(), cols.end()));
  return best;
}

struct PairTally {
  long long tp = 0, fp = 0, fn = 0, tn = 0;
};

// O(n^2) tally over all sample pairs.
inline PairTally all_pairs_tally(const std::vector<int>& pred, const std::vector<int>& truth) {
  PairTally tally;
  const std::size_t n = pred.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same_pred = pred[i] == pred[j];
      const bool same_truth = truth[i] == truth[j];
      if (same_pred && same_truth) ++tally.tp;
      else if (same_pred) ++tally.fp;
      else if (same_truth) ++tally.fn;
      else ++tally.tn;
    }
  return tally;
}

inline double ari_from_tally(const PairTally& t) {
  const double total = static_cast<double>(t.tp + t.fp + t.fn + t.tn);
  const double index = static_cast<double>(t.tp);
  const double pred_pairs = static_cast<double>(t.tp + t.fp);
  const double truth_pairs = static_cast<double>(t.tp + t.fn);
  const double expected = pred_pairs * truth_pairs / total;
  const double max_index = 0.5 * (pred_pairs + truth_pairs);
  if (std::abs(max_index - expected) < 1e-15) return 1.0;
  return (index - expected) / (max_index - expected);
}

// NMI from an explicit probability table.
inline double nmi_probability_table(const std::vector<int>& pred, const std::vector<int>& truth) {
  const int r = *std::max_element(pred.begin(), pred.end()) + 1;
  const int q = *std::max_element(truth.begin(), truth.end()) + 1;
  const double n = static_cast<double>(pred.size());
  std::vector<std::vector<double>> p(r, std::vector<double>(q, 0.0));
  std::vector<double> pa(r, 0.0), pb(q, 0.0);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    p[pred[i]][truth[i]] += 1.0 / n;
    pa[pred[i]] += 1.0 / n;
    pb[truth[i]] += 1.0 / n;
  }
  double ha = 0.0, hb = 0.0, mi = 0.0;
  for (double v : pa)
    if (v > 0) ha -= v * std::log(v);
  for (double v : pb)
    if (v > 0) hb -= v * std::log(v);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < q; ++b)
      if (p[a][b] > 0) mi += p[a][b] * std::log(p[a][b] / (pa[a] * pb[b]));
  if (ha == 0.0 && hb == 0.0) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;
  return mi / std::sqrt(ha * hb);
}

}  // namespace oracle
