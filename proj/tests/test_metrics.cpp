#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tsc/metrics.hpp"

#include <random>

using namespace tsc;

namespace {

Labeling make_labeling(std::vector<int> labels) {
  int k = 0;
  for (int l : labels) k = std::max(k, l + 1);
  return Labeling{std::move(labels), k, false};
}

std::vector<int> random_partition(int n, int k, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<int> dist(0, k - 1);
  std::vector<int> labels(n);
  for (int& l : labels) l = dist(eng);
  return labels;
}

ConfusionTable table_of(const std::vector<int>& pred, const std::vector<int>& truth) {
  return confusion(make_labeling(pred), make_labeling(truth));
}

}  // namespace

TEST_CASE("confusion examples and tally oracle") {
  const ConfusionTable diag = table_of({0, 0, 1, 1}, {0, 0, 1, 1});
  CHECK(diag.counts(0, 0) == 2);
  CHECK(diag.counts(1, 1) == 2);
  CHECK(diag.counts(0, 1) == 0);

  const ConfusionTable row = table_of({0, 0, 0, 0}, {0, 1, 2, 3});
  CHECK(row.r() == 1);
  CHECK(row.q() == 4);
  for (int l = 0; l < 4; ++l) CHECK(row.counts(0, l) == 1);

  const auto pred = random_partition(200, 5, 11);
  const auto truth = random_partition(200, 4, 12);
  const ConfusionTable ct = table_of(pred, truth);
  Eigen::MatrixXi tally = Eigen::MatrixXi::Zero(ct.r(), ct.q());
  for (int i = 0; i < 200; ++i) ++tally(pred[i], truth[i]);
  CHECK(ct.counts == tally);

  CHECK_THROWS_AS(confusion(make_labeling({0, 1}), make_labeling({0, 1, 2})), invalid_input);
}

TEST_CASE("purity examples") {
  CHECK(purity(table_of({0, 0, 1, 1}, {0, 0, 1, 1})) == 1.0);
  CHECK(purity(table_of({0, 0, 0, 0}, {0, 0, 1, 1})) == 0.5);
  ConfusionTable ct;
  ct.counts = Eigen::MatrixXi(2, 2);
  ct.counts << 3, 1, 0, 4;
  ct.n = 8;
  CHECK(purity(ct) == doctest::Approx(0.875));
}

TEST_CASE("entropy examples") {
  CHECK(entropy(table_of({0, 0, 1, 1}, {0, 0, 1, 1})) == 0.0);
  CHECK(entropy(table_of({0, 0, 0, 0}, {0, 0, 1, 1})) == doctest::Approx(1.0));
  ConfusionTable ct;
  ct.counts = Eigen::MatrixXi(2, 2);
  ct.counts << 3, 1, 0, 4;
  ct.n = 8;
  const double expected = (3.0 * std::log2(4.0 / 3.0) + std::log2(4.0)) / 8.0;
  CHECK(entropy(ct) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(entropy(ct) == doctest::Approx(0.405639).epsilon(1e-5));

  ConfusionTable single;
  single.counts = Eigen::MatrixXi(2, 1);
  single.counts << 2, 2;
  single.n = 4;
  CHECK_THROWS_AS(entropy(single), invalid_input);
}

TEST_CASE("entropy is zero exactly for class-pure clusterings") {
  std::mt19937_64 eng(21);
  for (int rep = 0; rep < 50; ++rep) {
    ConfusionTable ct;
    const int r = 2 + static_cast<int>(eng() % 4);
    const int q = 2 + static_cast<int>(eng() % 4);
    ct.counts = Eigen::MatrixXi::Zero(r, q);
    const bool make_pure = rep % 2 == 0;
    bool impure = false;
    for (int k = 0; k < r; ++k) {
      if (make_pure) {
        ct.counts(k, static_cast<int>(eng() % q)) = 1 + static_cast<int>(eng() % 5);
      } else {
        for (int l = 0; l < q; ++l) ct.counts(k, l) = static_cast<int>(eng() % 4);
        if (ct.counts.row(k).sum() == 0) ct.counts(k, 0) = 1;
      }
    }
    for (int k = 0; k < r; ++k) {
      int nonzero = 0;
      for (int l = 0; l < q; ++l) nonzero += ct.counts(k, l) > 0 ? 1 : 0;
      impure = impure || nonzero > 1;
    }
    ct.n = ct.counts.sum();
    if (impure)
      CHECK(entropy(ct) > 0.0);
    else
      CHECK(entropy(ct) == 0.0);
  }
}

TEST_CASE("accuracy examples") {
  CHECK(accuracy(table_of({0, 0, 1, 1}, {0, 0, 1, 1})) == 1.0);
  // permuted labels are absorbed by the assignment
  CHECK(accuracy(table_of({2, 2, 0, 0, 1, 1}, {0, 0, 1, 1, 2, 2})) == 1.0);
}

TEST_CASE("accuracy equals the brute-force assignment maximum") {
  std::mt19937_64 eng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const int r = 1 + static_cast<int>(eng() % 5);
    const int q = 1 + static_cast<int>(eng() % 5);
    ConfusionTable ct;
    ct.counts = Eigen::MatrixXi::Zero(r, q);
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < q; ++l) ct.counts(k, l) = static_cast<int>(eng() % 7);
    if (ct.counts.sum() == 0) ct.counts(0, 0) = 1;
    ct.n = ct.counts.sum();
    const double expected =
        static_cast<double>(oracle::best_assignment_bruteforce(ct.counts)) / ct.n;
    CHECK(accuracy(ct) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("nmi examples and probability-table oracle") {
  CHECK(nmi(table_of({0, 0, 1, 1}, {1, 1, 0, 0})) == doctest::Approx(1.0));
  CHECK(nmi(table_of({0, 1, 0, 1}, {0, 0, 1, 1})) == doctest::Approx(0.0));
  CHECK(nmi(table_of({0, 0, 0}, {0, 0, 0})) == 1.0);   // identical trivial partitions
  CHECK(nmi(table_of({0, 0, 0, 0}, {0, 0, 1, 1})) == 0.0);

  for (int rep = 0; rep < 20; ++rep) {
    const auto pred = random_partition(100, 4, 500 + rep);
    const auto truth = random_partition(100, 3, 600 + rep);
    const double expected = oracle::nmi_probability_table(pred, truth);
    CHECK(nmi(table_of(pred, truth)) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("pair-counting examples") {
  const ConfusionTable perfect = table_of({0, 0, 1, 1}, {0, 0, 1, 1});
  CHECK(ari(perfect) == 1.0);
  CHECK(precision(perfect) == 1.0);
  CHECK(f_measure(perfect) == 1.0);

  // one cluster vs balanced two-class truth over n = 4
  const ConfusionTable lump = table_of({0, 0, 0, 0}, {0, 0, 1, 1});
  CHECK(precision(lump) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("ari, precision and f_measure match the all-pairs oracle") {
  std::mt19937_64 eng(41);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(eng() % 11);
    const auto pred = random_partition(n, 1 + static_cast<int>(eng() % 4), 700 + rep);
    const auto truth = random_partition(n, 1 + static_cast<int>(eng() % 4), 900 + rep);
    const ConfusionTable ct = table_of(pred, truth);
    const oracle::PairTally tally = oracle::all_pairs_tally(pred, truth);

    const double expected_precision =
        tally.tp + tally.fp > 0 ? static_cast<double>(tally.tp) / (tally.tp + tally.fp) : 0.0;
    const double expected_recall =
        tally.tp + tally.fn > 0 ? static_cast<double>(tally.tp) / (tally.tp + tally.fn) : 0.0;
    const double expected_f =
        expected_precision + expected_recall > 0
            ? 2 * expected_precision * expected_recall / (expected_precision + expected_recall)
            : 0.0;
    CHECK(precision(ct) == doctest::Approx(expected_precision).epsilon(1e-12));
    CHECK(f_measure(ct) == doctest::Approx(expected_f).epsilon(1e-12));
    CHECK(ari(ct) == doctest::Approx(oracle::ari_from_tally(tally)).epsilon(1e-12));
  }
}

TEST_CASE("every metric is invariant under label permutations") {
  std::mt19937_64 eng(51);
  const auto pred = random_partition(60, 4, 1001);
  const auto truth = random_partition(60, 3, 1002);
  const MetricsReport base = evaluate(make_labeling(pred), make_labeling(truth));

  std::vector<int> pred_perm{2, 0, 3, 1};
  std::vector<int> truth_perm{1, 2, 0};
  std::vector<int> pred2(pred.size()), truth2(truth.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    pred2[i] = pred_perm[pred[i]];
    truth2[i] = truth_perm[truth[i]];
  }
  const MetricsReport renamed = evaluate(make_labeling(pred2), make_labeling(truth2));
  CHECK(renamed.accuracy == doctest::Approx(base.accuracy).epsilon(1e-12));
  CHECK(renamed.nmi == doctest::Approx(base.nmi).epsilon(1e-12));
  CHECK(renamed.ari == doctest::Approx(base.ari).epsilon(1e-12));
  CHECK(renamed.precision == doctest::Approx(base.precision).epsilon(1e-12));
  CHECK(renamed.f_measure == doctest::Approx(base.f_measure).epsilon(1e-12));
  CHECK(renamed.purity == doctest::Approx(base.purity).epsilon(1e-12));
  CHECK(renamed.entropy == doctest::Approx(base.entropy).epsilon(1e-12));
}

TEST_CASE("accuracy never exceeds purity when clusters do not outnumber classes") {
  std::mt19937_64 eng(61);
  for (int rep = 0; rep < 100; ++rep) {
    const int q = 2 + static_cast<int>(eng() % 4);
    const int r = 1 + static_cast<int>(eng() % q);  // r <= q
    ConfusionTable ct;
    ct.counts = Eigen::MatrixXi::Zero(r, q);
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < q; ++l) ct.counts(k, l) = static_cast<int>(eng() % 6);
    if (ct.counts.sum() < 2) ct.counts(0, 0) += 2;
    ct.n = ct.counts.sum();
    CHECK(accuracy(ct) <= purity(ct) + 1e-12);
  }
}

TEST_CASE("report bounds hold on random inputs") {
  for (int rep = 0; rep < 30; ++rep) {
    const auto pred = random_partition(40, 5, 1100 + rep);
    const auto truth = random_partition(40, 4, 1200 + rep);
    const MetricsReport rep_out = evaluate(make_labeling(pred), make_labeling(truth));
    for (double v : {rep_out.accuracy, rep_out.nmi, rep_out.precision, rep_out.f_measure,
                     rep_out.purity}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(rep_out.ari >= -1.0);
    CHECK(rep_out.ari <= 1.0);
    CHECK(rep_out.entropy >= 0.0);
  }
}
