#pragma once

#include "tsc/spectral.hpp"
#include "tsc/types.hpp"

namespace tsc {

/// Contingency counts: counts(k, l) = number of samples in cluster k whose
/// true class is l.
struct ConfusionTable {
  Eigen::MatrixXi counts;  // r clusters x q classes
  int n = 0;

  int r() const { return static_cast<int>(counts.rows()); }
  int q() const { return static_cast<int>(counts.cols()); }
};

ConfusionTable confusion(const Labeling& pred, const Labeling& truth);

/// (1/n) sum_k max_l n_k^l
double purity(const ConfusionTable& ct);

/// Normalized conditional entropy, in [0, 1] for q >= 2; 0 iff every cluster
/// is class-pure.
double entropy(const ConfusionTable& ct);

/// Best-assignment accuracy (Hungarian algorithm on the negated table).
double accuracy(const ConfusionTable& ct);

/// Mutual information normalized by the geometric mean of the marginal
/// entropies; 1 for identical partitions, 0 when either side is trivial.
double nmi(const ConfusionTable& ct);

/// Pair-counting scores.
double ari(const ConfusionTable& ct);
double precision(const ConfusionTable& ct);
double f_measure(const ConfusionTable& ct);

struct MetricsReport {
  double accuracy = 0.0;
  double nmi = 0.0;
  double ari = 0.0;
  double precision = 0.0;
  double f_measure = 0.0;
  double purity = 0.0;
  double entropy = 0.0;
};

MetricsReport evaluate(const Labeling& pred, const Labeling& truth);

}  // namespace tsc
