// cellmend CLI: simulate KPI data, resample it, train and evaluate the
// cost-sensitive SVM, and run the bundled experiments.  Every subcommand
// exits 0 on success and nonzero with a diagnostic on stderr otherwise.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cellmend/csv.hpp"
#include "cellmend/dataset.hpp"
#include "cellmend/experiments.hpp"
#include "cellmend/metrics.hpp"
#include "cellmend/parallel.hpp"
#include "cellmend/preprocess.hpp"
#include "cellmend/resample.hpp"
#include "cellmend/simulate.hpp"
#include "cellmend/svm.hpp"

namespace {

using namespace cellmend;

struct SimulateArgs {
  std::string config;
  std::string out = "simulated.csv";
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int run_simulate(const SimulateArgs& args) {
  ExperimentSpec spec = make_default_spec("fig3");
  if (!args.config.empty()) apply_config_file(spec, args.config);
  if (args.seed_given) spec.sim.seed = args.seed;
  validate(spec.sim);
  const Dataset ds = generate_dataset(spec.sim);
  save_csv(ds, args.out);
  std::cout << "wrote " << args.out << ": " << ds.size() << " rows ("
            << ds.count(kLabelFault) << " fault, " << ds.count(kLabelOk)
            << " fault-free), seed " << spec.sim.seed << "\n";
  return 0;
}

struct ResampleArgs {
  std::string method;
  double ratio = 1.0;
  int k = 5;
  std::string mode = "paper";
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
};

int run_resample(const ResampleArgs& args) {
  ResampleConfig cfg;
  cfg.target_ratio = args.ratio;
  cfg.k = args.k;
  cfg.seed = args.seed;
  if (args.mode == "paper" || args.mode == "extrapolate") {
    cfg.mode = SmoteMode::kExtrapolate;
  } else if (args.mode == "canonical" || args.mode == "interpolate") {
    cfg.mode = SmoteMode::kInterpolate;
  } else {
    throw std::invalid_argument("--mode must be paper or canonical");
  }
  const Dataset in = load_csv(args.in);
  Dataset out;
  if (args.method == "over") {
    out = oversample(in, cfg);
  } else if (args.method == "under") {
    out = undersample(in, cfg);
  } else if (args.method == "combined") {
    out = combined_resample(in, cfg);
  } else if (args.method == "smote") {
    out = smote(in, cfg).data;
  } else {
    throw std::invalid_argument("--method must be over, under, combined, or smote");
  }
  save_csv(out, args.out);
  std::cout << "wrote " << args.out << ": " << out.size() << " rows ("
            << out.count(kLabelFault) << " fault, " << out.count(kLabelOk)
            << " fault-free) from " << in.size() << " input rows\n";
  return 0;
}

struct TrainArgs {
  std::string in;
  double c = 1.0;
  double c01 = 1.0;
  double c10 = 1.0;
  double tol = 1e-6;
  int max_iterations = 2000000;
  std::string model_out = "model.json";
};

int run_train(const TrainArgs& args) {
  const Dataset raw = load_csv(args.in);
  const Scaler scaler = Scaler::fit(raw);
  const Dataset scaled = scaler.transform(raw);
  SvmConfig cfg;
  cfg.C = args.c;
  cfg.tolerance = args.tol;
  cfg.max_iterations = args.max_iterations;
  cfg.cost.c01 = args.c01;
  cfg.cost.c10 = args.c10;
  const LinearModel model = train_svm(scaled, cfg);
  save_model(model, cfg, scaler, args.model_out);
  std::cout << "wrote " << args.model_out << ": converged in "
            << model.iterations << " sweeps, duality gap "
            << format_double(model.duality_gap) << ", objective "
            << format_double(model.objective) << "\n";
  return 0;
}

struct EvaluateArgs {
  std::string model;
  std::string in;
  std::string out = "eval";
  double threshold = 0.0;
};

int run_evaluate(const EvaluateArgs& args) {
  const LoadedModel loaded = load_model(args.model);
  const Dataset raw = load_csv(args.in);
  const Dataset scaled = loaded.scaler.transform(raw);
  std::vector<double> scores;
  parallel::batch_scores(loaded.model, scaled.x, scores);

  const Confusion conf = confusion_at(scaled.y, scores, args.threshold);
  const double cost = total_cost(conf, loaded.config.cost);
  const double area = auc(scaled.y, scores);

  std::string metrics_txt;
  auto put = [&metrics_txt](const std::string& key, const std::string& value) {
    metrics_txt += key + "=" + value + "\n";
  };
  put("auc", format_double(area));
  put("total_cost", format_double(cost));
  put("f1", format_double(f_measure(conf)));
  put("g_mean", format_double(g_mean(conf)));
  put("precision", format_double(precision(conf)));
  put("recall", format_double(recall(conf)));
  put("specificity", format_double(specificity(conf)));
  put("tp", std::to_string(conf.tp));
  put("fn", std::to_string(conf.fn));
  put("fp", std::to_string(conf.fp));
  put("tn", std::to_string(conf.tn));

  std::string roc_csv = "fpr,tpr,threshold\n";
  for (const RocPoint& p : roc_curve(scaled.y, scores)) {
    roc_csv += format_double(p.fpr) + "," + format_double(p.tpr) + "," +
               format_double(p.threshold) + "\n";
  }
  std::string pr_csv = "recall,precision,threshold\n";
  for (const PrPoint& p : pr_curve(scaled.y, scores)) {
    pr_csv += format_double(p.recall) + "," + format_double(p.precision) +
              "," + format_double(p.threshold) + "\n";
  }

  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back("metrics.txt", metrics_txt);
  files.emplace_back("roc.csv", roc_csv);
  files.emplace_back("pr.csv", pr_csv);
  write_output_tree(args.out, std::move(files),
                    {"evaluate.model = " + args.model,
                     "evaluate.input = " + args.in,
                     "evaluate.threshold = " + format_double(args.threshold)});
  std::cout << metrics_txt << "wrote " << args.out << "/\n";
  return 0;
}

struct ExperimentArgs {
  std::string id;
  std::string seeds;
  std::string out;
  std::string config;
};

int run_experiment_cmd(const ExperimentArgs& args) {
  ExperimentSpec spec = make_default_spec(args.id);
  spec.out_dir = "out/" + args.id;
  if (!args.config.empty()) apply_config_file(spec, args.config);
  if (!args.seeds.empty()) {
    apply_config_text(spec, "experiment.seeds = " + args.seeds);
  }
  if (!args.out.empty()) spec.out_dir = args.out;
  run_experiment(spec);
  std::cout << "wrote " << spec.out_dir.string() << "/ (" << spec.id << ", "
            << spec.seeds.size() << " seeds)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cellmend: cellular-network fault detection from KPI data "
               "under class imbalance"};
  app.require_subcommand(1);

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Generate a synthetic KPI dataset and write it as CSV");
  sim->add_option("--config", sim_args.config,
                  "Config file overriding scenario parameters (sim.* keys)");
  CLI::Option* seed_opt =
      sim->add_option("--seed", sim_args.seed, "Generator seed");
  sim->add_option("--out", sim_args.out, "Output CSV path")
      ->capture_default_str();

  ResampleArgs rs_args;
  CLI::App* rs = app.add_subcommand(
      "resample", "Rebalance a dataset CSV (duplication, subsampling, SMOTE)");
  rs->add_option("--method", rs_args.method, "over | under | combined | smote")
      ->required();
  rs->add_option("--ratio", rs_args.ratio,
                 "Target minority:majority ratio in (0, 1]")
      ->capture_default_str();
  rs->add_option("--k", rs_args.k, "Neighbors for SMOTE")
      ->capture_default_str();
  rs->add_option("--mode", rs_args.mode,
                 "SMOTE variant: paper (extrapolating) | canonical "
                 "(interpolating)")
      ->capture_default_str();
  rs->add_option("--seed", rs_args.seed, "Resampling seed")
      ->capture_default_str();
  rs->add_option("--in", rs_args.in, "Input CSV")->required();
  rs->add_option("--out", rs_args.out, "Output CSV")->required();

  TrainArgs tr_args;
  CLI::App* tr = app.add_subcommand(
      "train", "Fit the cost-sensitive linear SVM on a dataset CSV");
  tr->add_option("--in", tr_args.in, "Training CSV")->required();
  tr->add_option("--c", tr_args.c, "Regularization weight C")
      ->capture_default_str();
  tr->add_option("--c01", tr_args.c01, "Missed-fault slack weight")
      ->capture_default_str();
  tr->add_option("--c10", tr_args.c10, "False-alarm slack weight")
      ->capture_default_str();
  tr->add_option("--tol", tr_args.tol, "Duality-gap tolerance")
      ->capture_default_str();
  tr->add_option("--max-iters", tr_args.max_iterations,
                 "Maximum coordinate-descent sweeps")
      ->capture_default_str();
  tr->add_option("--model-out", tr_args.model_out, "Model JSON path")
      ->capture_default_str();

  EvaluateArgs ev_args;
  CLI::App* ev = app.add_subcommand(
      "evaluate", "Score a dataset CSV with a trained model and emit metrics");
  ev->add_option("--model", ev_args.model, "Model JSON from 'train'")
      ->required();
  ev->add_option("--in", ev_args.in, "Test CSV")->required();
  ev->add_option("--out", ev_args.out,
                 "Output directory (metrics.txt, roc.csv, pr.csv)")
      ->capture_default_str();
  ev->add_option("--threshold", ev_args.threshold,
                 "Decision threshold on the score")
      ->capture_default_str();

  ExperimentArgs ex_args;
  CLI::App* ex = app.add_subcommand(
      "experiment", "Run a bundled experiment (fig3, fig4, or fig5)");
  ex->add_option("id", ex_args.id, "fig3 | fig4 | fig5")->required();
  ex->add_option("--seeds", ex_args.seeds,
                 "Seed list: '1..10' or comma-separated");
  ex->add_option("--out", ex_args.out, "Output directory (default out/<id>)");
  ex->add_option("--config", ex_args.config, "Config file with overrides");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      sim_args.seed_given = seed_opt->count() > 0;
      return run_simulate(sim_args);
    }
    if (rs->parsed()) return run_resample(rs_args);
    if (tr->parsed()) return run_train(tr_args);
    if (ev->parsed()) return run_evaluate(ev_args);
    if (ex->parsed()) return run_experiment_cmd(ex_args);
  } catch (const std::exception& e) {
    std::cerr << "cellmend: error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "cellmend: no subcommand given\n";
  return 1;
}
