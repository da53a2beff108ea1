#include "tsc/experiment.hpp"
#include "tsc/io.hpp"
#include "tsc/metrics.hpp"
#include "tsc/synthetic.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

struct ClusterOptions {
  std::string data;
  std::string labels;
  bool synth = false;
  tsc::SyntheticSpec synth_spec;
  std::uint64_t synth_seed = 0;

  std::string variant = "tssc";
  std::string kernel;
  int degree = 2;
  double offset = 1.0;
  double bandwidth = 0.0;  // 0 = auto (median heuristic)
  std::string affinity = "abs";
  bool piecemeal = false;

  double lambda = 0.1;
  double mu = 0.1;
  double gamma = 1.0;
  double mu_c = -1.0;  // -1 = variant default (0.1 TSSC, 0.01 TLRR)
  int max_iters = 50;
  double tol_rel = 1e-4;
  int inner_iters = 100;
  double inner_tol = 1e-6;

  int k = 3;
  std::uint64_t seed = 0;
  int restarts = 5;
  int repeats = 10;
  std::string out_dir;
};

void add_cluster_options(CLI::App* cmd, ClusterOptions& opt) {
  cmd->set_config("--config", "", "plain key=value config file; flags override it");

  cmd->add_option("--data", opt.data, "dataset CSV (one sample per row)");
  cmd->add_option("--labels", opt.labels, "ground-truth labels file");
  cmd->add_flag("--synth", opt.synth, "run on generated subspace data instead of a file");
  cmd->add_option("--clusters", opt.synth_spec.k_subspaces, "synthetic: number of subspaces");
  cmd->add_option("--dim", opt.synth_spec.ambient_dim, "synthetic: ambient dimension");
  cmd->add_option("--subspace-dim", opt.synth_spec.subspace_dim, "synthetic: subspace dimension");
  cmd->add_option("--points", opt.synth_spec.points_per_subspace,
                  "synthetic: points per subspace");
  cmd->add_option("--noise", opt.synth_spec.noise_sigma, "synthetic: ambient noise sigma");
  cmd->add_option("--sample-norm", opt.synth_spec.sample_norm, "synthetic: sample l2 norm");
  cmd->add_option("--synth-seed", opt.synth_seed, "synthetic: generator seed");

  cmd->add_option("--variant", opt.variant, "tllmc | tssc | tlrr")
      ->check(CLI::IsMember({"tllmc", "tssc", "tlrr"}));
  cmd->add_option("--kernel", opt.kernel, "linear | poly | gaussian | laplacian")
      ->check(CLI::IsMember({"linear", "poly", "polynomial", "gaussian", "laplacian"}));
  cmd->add_option("--degree", opt.degree, "polynomial kernel degree");
  cmd->add_option("--offset", opt.offset, "polynomial kernel offset");
  cmd->add_option("--bandwidth", opt.bandwidth,
                  "Gaussian/Laplacian bandwidth (0 = median heuristic)");
  cmd->add_option("--affinity", opt.affinity, "abs | llmc | lrr")
      ->check(CLI::IsMember({"abs", "llmc", "lrr"}));
  cmd->add_flag("--piecemeal", opt.piecemeal,
                "transform learning first, a single C update afterwards");

  cmd->add_option("--lambda", opt.lambda, "transform regularizer weight");
  cmd->add_option("--mu", opt.mu, "coefficient sparsity weight");
  cmd->add_option("--gamma", opt.gamma, "self-expression coupling weight");
  cmd->add_option("--mu-c", opt.mu_c, "C regularizer weight (default per variant)");
  cmd->add_option("--max-iters", opt.max_iters, "outer iteration cap");
  cmd->add_option("--tol-rel", opt.tol_rel, "relative objective-change stop tolerance");
  cmd->add_option("--inner-iters", opt.inner_iters, "inner solver iteration cap");
  cmd->add_option("--inner-tol", opt.inner_tol, "inner solver tolerance");

  cmd->add_option("--k", opt.k, "number of clusters");
  cmd->add_option("--seed", opt.seed, "pipeline seed");
  cmd->add_option("--restarts", opt.restarts, "k-means restarts per clustering");
  cmd->add_option("--repeats", opt.repeats, "spectral/k-means repeats for metric averaging");
  cmd->add_option("--out-dir", opt.out_dir, "directory for labels.txt, trace.csv, metrics.json");
}

tsc::ExperimentConfig to_config(const ClusterOptions& opt) {
  tsc::ExperimentConfig cfg;
  if (!opt.data.empty()) {
    cfg.data_path = opt.data;
    if (!opt.labels.empty()) cfg.labels_path = opt.labels;
  } else if (opt.synth) {
    tsc::SyntheticSpec spec = opt.synth_spec;
    spec.seed = opt.synth_seed;
    cfg.synth = spec;
  }
  cfg.variant = tsc::variant_from_string(opt.variant);
  cfg.hp = tsc::Hyperparams::defaults(cfg.variant);
  cfg.hp.lambda = opt.lambda;
  cfg.hp.mu = opt.mu;
  cfg.hp.gamma = opt.gamma;
  if (opt.mu_c >= 0.0) cfg.hp.mu_c = opt.mu_c;
  cfg.hp.max_outer_iters = opt.max_iters;
  cfg.hp.tol_rel = opt.tol_rel;
  cfg.hp.inner_iters = opt.inner_iters;
  cfg.hp.inner_tol = opt.inner_tol;
  if (!opt.kernel.empty()) {
    tsc::KernelSpec spec;
    spec.family = tsc::kernel_family_from_string(opt.kernel);
    spec.degree = opt.degree;
    spec.offset = opt.offset;
    if (opt.bandwidth > 0.0) spec.bandwidth = opt.bandwidth;
    cfg.kernel = spec;
  }
  cfg.affinity = tsc::affinity_rule_from_string(opt.affinity);
  cfg.piecemeal = opt.piecemeal;
  cfg.k = opt.k;
  cfg.seed = opt.seed;
  cfg.restarts = opt.restarts;
  cfg.repeats = opt.repeats;
  cfg.out_dir = opt.out_dir;
  return cfg;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"transformed subspace clustering toolkit"};
  app.require_subcommand(1);

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "generate a union-of-subspaces dataset");
  tsc::SyntheticSpec synth_spec;
  std::string synth_out;
  synth_cmd->add_option("--clusters", synth_spec.k_subspaces, "number of subspaces");
  synth_cmd->add_option("--dim", synth_spec.ambient_dim, "ambient dimension");
  synth_cmd->add_option("--subspace-dim", synth_spec.subspace_dim, "subspace dimension");
  synth_cmd->add_option("--points", synth_spec.points_per_subspace, "points per subspace");
  synth_cmd->add_option("--noise", synth_spec.noise_sigma, "ambient noise sigma");
  synth_cmd->add_option("--sample-norm", synth_spec.sample_norm, "sample l2 norm");
  synth_cmd->add_option("--seed", synth_spec.seed, "generator seed");
  synth_cmd->add_option("--out", synth_out, "output CSV path (labels go beside it)")
      ->required();

  // cluster + trace share the experiment options
  auto* cluster_cmd = app.add_subcommand("cluster", "run the full clustering pipeline");
  ClusterOptions cluster_opt;
  add_cluster_options(cluster_cmd, cluster_opt);

  auto* trace_cmd = app.add_subcommand("trace", "fit only; print the normalized objective trace");
  ClusterOptions trace_opt;
  add_cluster_options(trace_cmd, trace_opt);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a predicted labeling against ground truth");
  std::string eval_pred, eval_truth;
  eval_cmd->add_option("--pred", eval_pred, "predicted labels file")->required();
  eval_cmd->add_option("--truth", eval_truth, "ground-truth labels file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (synth_cmd->parsed()) {
    auto [data, labels] = tsc::generate_synthetic(synth_spec);
    tsc::save_matrix_csv(synth_out, data);
    tsc::save_labels(tsc::labels_path_for(synth_out), labels);
    std::cout << "wrote " << synth_out << " (" << data.samples() << " samples, dim "
              << data.dim() << ") and " << tsc::labels_path_for(synth_out).string() << "\n";
    return 0;
  }

  if (cluster_cmd->parsed()) {
    const tsc::ExperimentConfig cfg = to_config(cluster_opt);
    const tsc::ExperimentResult result = tsc::run_experiment(cfg);
    std::cout << tsc::metrics_report_json(cfg, result) << "\n";
    return 0;
  }

  if (trace_cmd->parsed()) {
    tsc::ExperimentConfig cfg = to_config(trace_opt);
    cfg.out_dir.clear();
    cfg.validate();
    tsc::DataMatrix x;
    if (cfg.data_path) {
      x = tsc::load_dataset(*cfg.data_path).first;
    } else {
      x = tsc::generate_synthetic(*cfg.synth).first;
    }
    tsc::TscModel model =
        cfg.piecemeal ? tsc::fit_piecemeal(x, cfg.variant, cfg.hp, cfg.seed)
                      : tsc::fit(x, cfg.variant, cfg.hp, cfg.kernel, cfg.seed);
    std::cout << "iter,normalized_objective\n";
    std::cout.precision(17);
    for (const auto& point : model.trace) std::cout << point.iter << ',' << point.value << '\n';
    return 0;
  }

  // eval
  const tsc::Labeling pred = tsc::load_labels(eval_pred);
  const tsc::Labeling truth = tsc::load_labels(eval_truth);
  if (pred.labels.size() != truth.labels.size())
    throw tsc::parse_error("eval: label files have different lengths");
  std::cout << tsc::metrics_json(tsc::evaluate(pred, truth)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const tsc::parse_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const tsc::numeric_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const tsc::invalid_input& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
