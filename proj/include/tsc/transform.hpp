#pragma once

#include "tsc/types.hpp"

namespace tsc {

/// Elementwise shrinkage: sign(m) .* max(0, |m| - tau).
Matrix soft_threshold(const Matrix& m, double tau);

/// Closed-form minimizer of
///   ||T X - Z||_F^2 + lambda (||T||_F^2 - log det T)
/// over square transforms with positive determinant.
Transform update_transform(const DataMatrix& x, const CoeffMatrix& z, double lambda);

/// Coefficient update: approximately minimizes
///   ||T X - Z||_F^2 + mu ||Z||_1 + gamma ||Z (I - C)||_F^2
/// by ISTA, warm-started from `warm` when given (otherwise from the gamma=0
/// solution). For gamma = 0 the exact proximal solution soft_threshold(TX, mu/2)
/// is returned directly. Never increases the objective relative to the warm start.
CoeffMatrix update_z(const Transform& t, const DataMatrix& x, const SubspaceCoeffs& c,
                     const Hyperparams& hp, const CoeffMatrix* warm = nullptr);

/// Full objective:
///   ||TX - Z||^2 + lambda(||T||^2 - log det T) + mu ||Z||_1
///   + gamma ||Z(I - C)||^2 + R(C)
/// with R(C) = 0 (TLLMC), mu_c ||C||_1 (TSSC) or mu_c ||C||_* (TLRR).
/// Throws numeric_error when det T <= 0 (objective undefined).
double joint_objective(const Transform& t, const DataMatrix& x, const CoeffMatrix& z,
                       const SubspaceCoeffs& c, const Hyperparams& hp, Variant variant);

/// log det of a matrix with positive determinant; numeric_error otherwise.
double log_det_positive(const Matrix& m);

}  // namespace tsc
