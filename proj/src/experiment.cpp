#include "tsc/experiment.hpp"

#include "tsc/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace tsc {

using nlohmann::json;

const char* to_string(AffinityRule rule) {
  switch (rule) {
    case AffinityRule::Abs: return "abs";
    case AffinityRule::Llmc: return "llmc";
    case AffinityRule::Lrr: return "lrr";
  }
  return "?";
}

AffinityRule affinity_rule_from_string(const std::string& name) {
  if (name == "abs") return AffinityRule::Abs;
  if (name == "llmc") return AffinityRule::Llmc;
  if (name == "lrr") return AffinityRule::Lrr;
  throw invalid_input("unknown affinity rule: " + name);
}

void ExperimentConfig::validate() const {
  if (!data_path && !synth)
    throw invalid_input("ExperimentConfig: either a dataset path or a synthetic spec is required");
  if (data_path && synth)
    throw invalid_input("ExperimentConfig: dataset path and synthetic spec are exclusive");
  if (data_path && !std::filesystem::exists(*data_path))
    throw invalid_input("ExperimentConfig: dataset does not exist: " + data_path->string());
  if (labels_path && !std::filesystem::exists(*labels_path))
    throw invalid_input("ExperimentConfig: labels file does not exist: " + labels_path->string());
  if (synth) synth->validate();
  if (kernel) kernel->validate();
  hp.validate();
  if (k < 2) throw invalid_input("ExperimentConfig: k must be at least 2");
  if (restarts < 1) throw invalid_input("ExperimentConfig: restarts must be positive");
  if (repeats < 1) throw invalid_input("ExperimentConfig: repeats must be positive");
}

namespace {

AffinityMatrix make_affinity(AffinityRule rule, const SubspaceCoeffs& c) {
  switch (rule) {
    case AffinityRule::Abs: return affinity_abs(c);
    case AffinityRule::Llmc: return affinity_llmc(c);
    case AffinityRule::Lrr: return affinity_lrr(c);
  }
  throw invalid_input("unknown affinity rule");
}

MetricStat stat_of(const std::vector<MetricsReport>& reports, double MetricsReport::*field) {
  MetricStat st;
  const double n = static_cast<double>(reports.size());
  for (const auto& rep : reports) st.mean += rep.*field;
  st.mean /= n;
  double var = 0.0;
  for (const auto& rep : reports) {
    const double dev = rep.*field - st.mean;
    var += dev * dev;
  }
  st.std_dev = std::sqrt(var / n);
  return st;
}

json stat_json(const MetricStat& st) { return json{{"mean", st.mean}, {"std", st.std_dev}}; }

json config_echo(const ExperimentConfig& cfg) {
  json echo;
  echo["data"] = cfg.data_path ? json(cfg.data_path->string()) : json(nullptr);
  echo["labels"] = cfg.labels_path ? json(cfg.labels_path->string()) : json(nullptr);
  if (cfg.synth) {
    echo["synthetic"] = {{"k_subspaces", cfg.synth->k_subspaces},
                         {"ambient_dim", cfg.synth->ambient_dim},
                         {"subspace_dim", cfg.synth->subspace_dim},
                         {"points_per_subspace", cfg.synth->points_per_subspace},
                         {"noise_sigma", cfg.synth->noise_sigma},
                         {"sample_norm", cfg.synth->sample_norm},
                         {"seed", cfg.synth->seed}};
  } else {
    echo["synthetic"] = nullptr;
  }
  echo["variant"] = to_string(cfg.variant);
  echo["hyperparams"] = {{"lambda", cfg.hp.lambda},
                         {"mu", cfg.hp.mu},
                         {"gamma", cfg.hp.gamma},
                         {"mu_c", cfg.hp.mu_c},
                         {"max_outer_iters", cfg.hp.max_outer_iters},
                         {"tol_rel", cfg.hp.tol_rel},
                         {"inner_iters", cfg.hp.inner_iters},
                         {"inner_tol", cfg.hp.inner_tol}};
  if (cfg.kernel) {
    json kj{{"family", to_string(cfg.kernel->family)}};
    if (cfg.kernel->family == KernelFamily::Polynomial) {
      kj["degree"] = cfg.kernel->degree;
      kj["offset"] = cfg.kernel->offset;
    }
    if (cfg.kernel->family == KernelFamily::Gaussian ||
        cfg.kernel->family == KernelFamily::Laplacian) {
      kj["bandwidth"] = cfg.kernel->bandwidth ? json(*cfg.kernel->bandwidth) : json("auto");
    }
    echo["kernel"] = kj;
  } else {
    echo["kernel"] = nullptr;
  }
  echo["affinity"] = to_string(cfg.affinity);
  echo["piecemeal"] = cfg.piecemeal;
  echo["k"] = cfg.k;
  echo["seed"] = cfg.seed;
  echo["restarts"] = cfg.restarts;
  echo["repeats"] = cfg.repeats;
  return echo;
}

}  // namespace

std::string config_echo_json(const ExperimentConfig& cfg) { return config_echo(cfg).dump(2); }

std::string metrics_json(const MetricsReport& report) {
  json j{{"accuracy", report.accuracy}, {"nmi", report.nmi},
         {"ari", report.ari},           {"precision", report.precision},
         {"f_measure", report.f_measure}, {"purity", report.purity},
         {"entropy", report.entropy}};
  return j.dump(2);
}

std::string metrics_report_json(const ExperimentConfig& cfg, const ExperimentResult& result) {
  json j;
  if (result.metrics) {
    j["accuracy"] = stat_json(result.metrics->accuracy);
    j["nmi"] = stat_json(result.metrics->nmi);
    j["ari"] = stat_json(result.metrics->ari);
    j["precision"] = stat_json(result.metrics->precision);
    j["f_measure"] = stat_json(result.metrics->f_measure);
    j["purity"] = stat_json(result.metrics->purity);
    j["entropy"] = stat_json(result.metrics->entropy);
  }
  j["config_echo"] = config_echo(cfg);
  return j.dump(2);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();

  DataMatrix x;
  std::optional<Labeling> truth;
  if (cfg.data_path) {
    auto [data, companion] = load_dataset(*cfg.data_path);
    x = std::move(data);
    truth = std::move(companion);
    if (cfg.labels_path) {
      Labeling lab = load_labels(*cfg.labels_path);
      if (static_cast<Index>(lab.labels.size()) != x.samples())
        throw parse_error(cfg.labels_path->string() +
                          ": label count does not match sample count");
      truth = std::move(lab);
    }
  } else {
    auto [data, labels] = generate_synthetic(*cfg.synth);
    x = std::move(data);
    truth = std::move(labels);
  }

  ExperimentResult result;
  if (cfg.piecemeal) {
    // the piecemeal baseline consumes the Gram matrix as its data in kernel mode
    const DataMatrix input = cfg.kernel ? DataMatrix(gram_matrix(x, *cfg.kernel)) : x;
    result.model = fit_piecemeal(input, cfg.variant, cfg.hp, cfg.seed);
  } else {
    result.model = fit(x, cfg.variant, cfg.hp, cfg.kernel, cfg.seed);
  }

  const AffinityMatrix a = make_affinity(cfg.affinity, result.model.c);
  for (int rep = 0; rep < cfg.repeats; ++rep) {
    Labeling lab = normalized_cuts(a, cfg.k, mix_seed(cfg.seed, 1000 + rep), cfg.restarts);
    if (rep == 0) result.labels = lab;
    if (truth) result.per_repeat.push_back(evaluate(lab, *truth));
  }

  if (truth) {
    MetricsSummary summary;
    summary.accuracy = stat_of(result.per_repeat, &MetricsReport::accuracy);
    summary.nmi = stat_of(result.per_repeat, &MetricsReport::nmi);
    summary.ari = stat_of(result.per_repeat, &MetricsReport::ari);
    summary.precision = stat_of(result.per_repeat, &MetricsReport::precision);
    summary.f_measure = stat_of(result.per_repeat, &MetricsReport::f_measure);
    summary.purity = stat_of(result.per_repeat, &MetricsReport::purity);
    summary.entropy = stat_of(result.per_repeat, &MetricsReport::entropy);
    result.metrics = summary;
  }

  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    save_labels(cfg.out_dir / "labels.txt", result.labels);
    save_trace_csv(cfg.out_dir / "trace.csv", result.model.trace);
    std::ofstream out(cfg.out_dir / "metrics.json");
    if (!out) throw parse_error("cannot write " + (cfg.out_dir / "metrics.json").string());
    out << metrics_report_json(cfg, result) << '\n';
  }
  return result;
}

}  // namespace tsc
