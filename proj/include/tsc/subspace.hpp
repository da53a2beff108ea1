#pragma once

#include "tsc/kernels.hpp"
#include "tsc/types.hpp"

#include <optional>
#include <vector>

namespace tsc {

/// Unregularized per-column solve: column i is the minimum-norm least-squares
/// solution of Z_{-i} c = z_i, re-expanded with a zero in position i.
SubspaceCoeffs update_c_llmc(const CoeffMatrix& z);

/// ISTA for  min_C ||Z - ZC||_F^2 + mu_c ||C||_1  s.t. diag(C) = 0
/// (diagonal projection after each shrinkage step; exact for the separable
/// l1 prox). Monotone in its own objective.
SubspaceCoeffs update_c_ssc(const CoeffMatrix& z, double mu_c, int max_iters = 100,
                            double tol = 1e-6, const SubspaceCoeffs* warm = nullptr);

/// Singular value thresholding: U max(S - tau, 0) V^T, the proximal operator
/// of tau ||.||_*.
Matrix svt(const Matrix& m, double tau);

/// Proximal gradient for  min_C ||Z - ZC||_F^2 + mu_c ||C||_*  with the
/// diagonal zeroed after each SVT step (projection heuristic; the best iterate
/// seen is returned, so the result never falls behind the warm start).
SubspaceCoeffs update_c_lrr(const CoeffMatrix& z, double mu_c, int max_iters = 100,
                            double tol = 1e-6, const SubspaceCoeffs* warm = nullptr);

struct TracePoint {
  int iter;
  double value;  // objective normalized by the initial objective
};

struct TscModel {
  Transform transform;  // kernel weights B when fitted in kernel mode
  CoeffMatrix z;
  SubspaceCoeffs c;
  Variant variant = Variant::TSSC;
  Hyperparams hp;
  std::vector<TracePoint> trace;
  std::optional<KernelSpec> kernel;
};

/// Joint alternating minimization. Per outer iteration: C-update (variant
/// specific), Z-update, closed-form transform update; stops when the relative
/// objective change drops below hp.tol_rel or max_outer_iters is reached.
/// In kernel mode the Gram matrix replaces the data and the transform is n x n.
/// Deterministic under a fixed seed.
TscModel fit(const DataMatrix& x, Variant variant, const Hyperparams& hp,
             const std::optional<KernelSpec>& kernel, std::uint64_t seed);

/// Ablation baseline: plain transform learning (gamma = 0) to convergence,
/// then a single variant C-update on the frozen coefficients.
TscModel fit_piecemeal(const DataMatrix& x, Variant variant, const Hyperparams& hp,
                       std::uint64_t seed);

}  // namespace tsc
