#include "tsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace tsc {

ConfusionTable confusion(const Labeling& pred, const Labeling& truth) {
  if (pred.labels.size() != truth.labels.size())
    throw invalid_input("confusion: labelings have different lengths");
  if (pred.labels.empty()) throw invalid_input("confusion: empty labelings");

  int r = pred.k, q = truth.k;
  for (std::size_t i = 0; i < pred.labels.size(); ++i) {
    if (pred.labels[i] < 0 || truth.labels[i] < 0)
      throw invalid_input("confusion: labels must be nonnegative");
    r = std::max(r, pred.labels[i] + 1);
    q = std::max(q, truth.labels[i] + 1);
  }

  ConfusionTable ct;
  ct.counts = Eigen::MatrixXi::Zero(r, q);
  ct.n = static_cast<int>(pred.labels.size());
  for (std::size_t i = 0; i < pred.labels.size(); ++i)
    ++ct.counts(pred.labels[i], truth.labels[i]);
  return ct;
}

double purity(const ConfusionTable& ct) {
  if (ct.n <= 0) throw invalid_input("purity: empty table");
  long long hits = 0;
  for (int k = 0; k < ct.r(); ++k) hits += ct.counts.row(k).maxCoeff();
  return static_cast<double>(hits) / ct.n;
}

double entropy(const ConfusionTable& ct) {
  if (ct.n <= 0) throw invalid_input("entropy: empty table");
  if (ct.q() < 2) throw invalid_input("entropy: need at least 2 classes");
  double sum = 0.0;
  for (int k = 0; k < ct.r(); ++k) {
    const double row_total = ct.counts.row(k).sum();
    if (row_total == 0.0) continue;
    for (int l = 0; l < ct.q(); ++l) {
      const double c = ct.counts(k, l);
      if (c > 0.0) sum += c * std::log2(c / row_total);
    }
  }
  return -sum / (ct.n * std::log2(static_cast<double>(ct.q())));
}

namespace {

// Hungarian algorithm (potentials formulation) for a square min-cost
// assignment; costs may be negative.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  const int m = static_cast<int>(cost.rows());
  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> match(m + 1, 0), way(m + 1, 0);

  for (int i = 1; i <= m; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  return match;  // match[j] = row assigned to column j (1-based)
}

struct PairCounts {
  double tp = 0.0;        // same cluster, same class pairs
  double pred_pairs = 0.0;
  double truth_pairs = 0.0;
  double total_pairs = 0.0;
};

double choose2(double v) { return v * (v - 1.0) / 2.0; }

PairCounts pair_counts(const ConfusionTable& ct) {
  PairCounts pc;
  for (int k = 0; k < ct.r(); ++k)
    for (int l = 0; l < ct.q(); ++l) pc.tp += choose2(ct.counts(k, l));
  for (int k = 0; k < ct.r(); ++k) pc.pred_pairs += choose2(ct.counts.row(k).sum());
  for (int l = 0; l < ct.q(); ++l) pc.truth_pairs += choose2(ct.counts.col(l).sum());
  pc.total_pairs = choose2(ct.n);
  return pc;
}

}  // namespace

double accuracy(const ConfusionTable& ct) {
  if (ct.n <= 0) throw invalid_input("accuracy: empty table");
  const int m = std::max(ct.r(), ct.q());
  Eigen::MatrixXd cost = Eigen::MatrixXd::Zero(m, m);
  cost.topLeftCorner(ct.r(), ct.q()) = -ct.counts.cast<double>();
  const std::vector<int> match = min_cost_assignment(cost);
  long long matched = 0;
  for (int j = 1; j <= m; ++j) {
    const int row = match[j] - 1, col = j - 1;
    if (row < ct.r() && col < ct.q()) matched += ct.counts(row, col);
  }
  return static_cast<double>(matched) / ct.n;
}

double nmi(const ConfusionTable& ct) {
  if (ct.n <= 0) throw invalid_input("nmi: empty table");
  const double n = ct.n;
  double h_pred = 0.0, h_truth = 0.0, mutual = 0.0;
  for (int k = 0; k < ct.r(); ++k) {
    const double a = ct.counts.row(k).sum();
    if (a > 0.0) h_pred -= (a / n) * std::log(a / n);
  }
  for (int l = 0; l < ct.q(); ++l) {
    const double b = ct.counts.col(l).sum();
    if (b > 0.0) h_truth -= (b / n) * std::log(b / n);
  }
  for (int k = 0; k < ct.r(); ++k)
    for (int l = 0; l < ct.q(); ++l) {
      const double c = ct.counts(k, l);
      if (c == 0.0) continue;
      const double a = ct.counts.row(k).sum(), b = ct.counts.col(l).sum();
      mutual += (c / n) * std::log(n * c / (a * b));
    }
  if (h_pred == 0.0 && h_truth == 0.0) return 1.0;  // both single-cluster
  if (h_pred == 0.0 || h_truth == 0.0) return 0.0;
  return std::clamp(mutual / std::sqrt(h_pred * h_truth), 0.0, 1.0);
}

double ari(const ConfusionTable& ct) {
  if (ct.n < 2) throw invalid_input("ari: need at least 2 samples");
  const PairCounts pc = pair_counts(ct);
  const double expected = pc.pred_pairs * pc.truth_pairs / pc.total_pairs;
  const double max_index = 0.5 * (pc.pred_pairs + pc.truth_pairs);
  if (std::abs(max_index - expected) < 1e-15) return 1.0;  // both partitions trivial
  return std::clamp((pc.tp - expected) / (max_index - expected), -1.0, 1.0);
}

double precision(const ConfusionTable& ct) {
  if (ct.n < 2) throw invalid_input("precision: need at least 2 samples");
  const PairCounts pc = pair_counts(ct);
  return pc.pred_pairs > 0.0 ? pc.tp / pc.pred_pairs : 0.0;
}

double f_measure(const ConfusionTable& ct) {
  if (ct.n < 2) throw invalid_input("f_measure: need at least 2 samples");
  const PairCounts pc = pair_counts(ct);
  const double p = pc.pred_pairs > 0.0 ? pc.tp / pc.pred_pairs : 0.0;
  const double r = pc.truth_pairs > 0.0 ? pc.tp / pc.truth_pairs : 0.0;
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

MetricsReport evaluate(const Labeling& pred, const Labeling& truth) {
  const ConfusionTable ct = confusion(pred, truth);
  MetricsReport report;
  report.accuracy = accuracy(ct);
  report.nmi = nmi(ct);
  report.ari = ari(ct);
  report.precision = precision(ct);
  report.f_measure = f_measure(ct);
  report.purity = purity(ct);
  report.entropy = entropy(ct);
  return report;
}

}  // namespace tsc
