#pragma once

#include "tsc/kernels.hpp"
#include "tsc/metrics.hpp"
#include "tsc/subspace.hpp"
#include "tsc/synthetic.hpp"
#include "tsc/types.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tsc {

enum class AffinityRule { Abs, Llmc, Lrr };

const char* to_string(AffinityRule rule);
AffinityRule affinity_rule_from_string(const std::string& name);

struct ExperimentConfig {
  std::optional<std::filesystem::path> data_path;    // file dataset ...
  std::optional<std::filesystem::path> labels_path;  // (explicit ground truth)
  std::optional<SyntheticSpec> synth;                // ... or generated one

  Variant variant = Variant::TSSC;
  Hyperparams hp = Hyperparams::defaults(Variant::TSSC);
  std::optional<KernelSpec> kernel;
  AffinityRule affinity = AffinityRule::Abs;
  bool piecemeal = false;

  int k = 3;                 // cluster count
  std::uint64_t seed = 0;
  int restarts = 5;          // k-means restarts inside one clustering
  int repeats = 10;          // spectral/k-means repeats for metric averaging
  std::filesystem::path out_dir;  // empty: no artifacts written

  void validate() const;
};

struct MetricStat {
  double mean = 0.0;
  double std_dev = 0.0;
};

struct MetricsSummary {
  MetricStat accuracy, nmi, ari, precision, f_measure, purity, entropy;
};

struct ExperimentResult {
  TscModel model;
  Labeling labels;                         // labeling of the first repeat
  std::vector<MetricsReport> per_repeat;   // empty without ground truth
  std::optional<MetricsSummary> metrics;
};

/// Full pipeline: (Gram matrix if kernelized) -> fit or fit_piecemeal ->
/// affinity -> normalized cuts -> metrics, with the spectral/k-means stage
/// repeated `repeats` times. Writes labels.txt, trace.csv and metrics.json
/// into out_dir when set. Identical config + seed produce byte-identical files.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// The resolved configuration as deterministic JSON (echoed into metrics.json).
std::string config_echo_json(const ExperimentConfig& cfg);

/// metrics.json content for a finished run.
std::string metrics_report_json(const ExperimentConfig& cfg, const ExperimentResult& result);

/// Single-pair evaluation as JSON (the `eval` subcommand payload).
std::string metrics_json(const MetricsReport& report);

}  // namespace tsc
