#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cellmend/resample.hpp"
#include "cellmend/simulate.hpp"
#include "cellmend/svm.hpp"

// Experiment harness: wires generate -> split -> scale -> resample -> train
// -> score end to end and writes CSV tables, SVG plots, and a manifest.
//
// Pipeline hygiene rules enforced here: the scaler is fitted on the training
// partition only, resampling touches only the (scaled) training partition,
// and within a seed every method is evaluated on the identical test set.
// Outputs are byte-deterministic functions of the ExperimentSpec.

namespace cellmend {

struct ExperimentSpec {
  std::string id;  // "fig3", "fig4", or "fig5"
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> cost_ratios;  // filled by make_default_spec per id
  ResampleConfig resample;          // per-seed runs override the seed field
  SimConfig sim;
  SvmConfig svm;
  double test_fraction = 0.2;
  std::filesystem::path out_dir = "out";
};

// Default spec for an experiment id: seeds {1..10}, the default scenario,
// and that experiment's cost-ratio grid (fig4: 1..30 step 1; fig5:
// {1, 5, 10, 20, 30}; fig3: none).
ExperimentSpec make_default_spec(const std::string& id);

void validate(const ExperimentSpec& spec);

// Apply `section.key = value` overrides (see README for the key list;
// '#' starts a comment).  Unknown keys raise std::runtime_error.
void apply_config_text(ExperimentSpec& spec, const std::string& text);
void apply_config_file(ExperimentSpec& spec,
                       const std::filesystem::path& path);

// Per-method mean ROC over seeds, linearly interpolated onto a fixed
// 101-point false-positive-rate grid and averaged pointwise.
std::vector<std::pair<double, double>> mean_roc(
    const std::vector<std::vector<RocPoint>>& curves);

// Write (relative path, content) pairs under out_dir plus a manifest.txt
// that echoes config_lines and lists every file with its byte size and
// FNV-1a 64-bit hash.  No timestamps: identical inputs give identical
// trees.  Files are created in sorted path order by a single thread.
void write_output_tree(
    const std::filesystem::path& out_dir,
    std::vector<std::pair<std::string, std::string>> files,
    const std::vector<std::string>& config_lines);

// Run one experiment, writing all outputs under spec.out_dir:
//   fig3: roc_plain.csv roc_oversample.csv roc_smote.csv auc.csv fig3.svg
//   fig4: costs.csv fig4.svg
//   fig5: roc_seed<S>_ratio<R>.csv (per seed and ratio) recall.csv fig5.svg
// plus manifest.txt in every case.
void run_experiment(const ExperimentSpec& spec);

void run_fig3(const ExperimentSpec& spec);
void run_fig4(const ExperimentSpec& spec);
void run_fig5(const ExperimentSpec& spec);

}  // namespace cellmend
