#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Precondition violations: bad shapes, out-of-range parameters, non-finite input.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Failures of the numerics themselves (factorization breakdown, log det of a
/// non-positive-determinant transform, ...).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File-format problems, reported with line/column context where possible.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sample matrix, one sample per column (d features x n samples).
struct DataMatrix {
  Matrix values;

  DataMatrix() = default;
  explicit DataMatrix(Matrix m) : values(std::move(m)) {
    if (values.rows() < 1 || values.cols() < 2)
      throw invalid_input("DataMatrix: need at least 1 feature and 2 samples");
    if (!values.allFinite()) throw invalid_input("DataMatrix: non-finite entries");
  }

  Index dim() const { return values.rows(); }
  Index samples() const { return values.cols(); }
};

/// Square d x d analysis transform. update_transform guarantees det > 0.
struct Transform {
  Matrix values;
};

/// Coefficient matrix Z, same shape as the data it was fit to.
struct CoeffMatrix {
  Matrix values;
};

/// Self-expression coefficients C (n x n, zero diagonal: a sample never
/// represents itself).
struct SubspaceCoeffs {
  Matrix values;

  SubspaceCoeffs() = default;
  explicit SubspaceCoeffs(Matrix m) : values(std::move(m)) {
    if (values.rows() != values.cols())
      throw invalid_input("SubspaceCoeffs: matrix must be square");
    if (!values.allFinite()) throw invalid_input("SubspaceCoeffs: non-finite entries");
    for (Index i = 0; i < values.rows(); ++i)
      if (values(i, i) != 0.0)
        throw invalid_input("SubspaceCoeffs: diagonal must be exactly zero");
  }

  static SubspaceCoeffs zero(Index n) { return SubspaceCoeffs(Matrix::Zero(n, n)); }

  Index size() const { return values.rows(); }
};

enum class Variant { TLLMC, TSSC, TLRR };

const char* to_string(Variant v);
Variant variant_from_string(const std::string& name);

struct Hyperparams {
  double lambda = 0.1;  // transform regularizer weight, must stay positive
  double mu = 0.1;      // Z sparsity weight
  double gamma = 1.0;   // self-expression coupling weight
  double mu_c = 0.1;    // C regularizer weight (TSSC l1 / TLRR nuclear)
  int max_outer_iters = 50;
  double tol_rel = 1e-4;
  int inner_iters = 100;
  double inner_tol = 1e-6;

  static Hyperparams defaults(Variant v) {
    Hyperparams hp;
    if (v == Variant::TLRR) hp.mu_c = 0.01;
    return hp;
  }

  void validate() const;
};

/// Deterministic per-stream seed derivation (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace tsc
