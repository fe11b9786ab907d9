#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include "cellmend/dataset.hpp"
#include "cellmend/metrics.hpp"
#include "cellmend/preprocess.hpp"

// Cost-sensitive linear SVM trained by dual coordinate descent.
//
// Labels are mapped fault (0) -> +1 and fault-free (1) -> -1, so positive
// scores mean "fault".  The primal objective is
//
//   min_{w,b}  1/2 (||w||^2 + b^2)
//              + C * sum_i kappa_i * max(0, 1 - y_i (w . x_i + b))
//
// with kappa_i = c01 for true faults and c10 for true fault-free samples:
// missing a fault can be made more expensive than a false alarm.  The bias is
// regularized (feature augmentation with a constant 1), which keeps the
// problem strictly convex in (w, b) and the optimum unique.  With equal costs
// this is exactly the plain soft-margin SVM.

namespace cellmend {

struct SvmConfig {
  double C = 1.0;
  double tolerance = 1e-6;
  int max_iterations = 2000000;  // coordinate sweeps (shrunk sweeps count too)
  CostMatrix cost;             // off-diagonal entries weight the slacks
};

struct LinearModel {
  std::array<double, kNumFeatures> w{};
  double b = 0.0;

  // Training metadata.
  double objective = 0.0;    // dual objective, minimization form
  double duality_gap = 0.0;  // primal - dual at the returned iterate
  int iterations = 0;        // sweeps actually run

  double score(const FeatureRow& row) const {
    double s = b;
    for (std::size_t k = 0; k < kNumFeatures; ++k) s += w[k] * row[k];
    return s;
  }

  // Fault iff score >= threshold 0.
  int predict(const FeatureRow& row) const {
    return score(row) >= 0.0 ? kLabelFault : kLabelOk;
  }
};

// Throws std::invalid_argument on empty/single-class input or a non-positive
// C / tolerance / cost weight; throws std::runtime_error if the duality-gap
// certificate gap <= tolerance * (1 + |objective|) is not reached within
// max_iterations (the message reports the final gap).  Deterministic: the
// per-sweep coordinate order comes from a constant-seeded shuffle, so
// identical inputs always produce the identical iterate sequence.
LinearModel train_svm(const std::vector<FeatureRow>& x,
                      const std::vector<int>& y, const SvmConfig& cfg);

LinearModel train_svm(const Dataset& ds, const SvmConfig& cfg);

// Warm-startable variant: alpha_io carries the dual multipliers.  Empty
// means a cold start; otherwise it must have one entry per sample and is
// projected into the current feasible box before optimization (so a solution
// for one cost setting can seed the next along a cost-ratio path).  On
// return it holds the converged multipliers.  The result for a given
// (x, y, cfg, alpha_io) is bitwise deterministic.
LinearModel train_svm(const std::vector<FeatureRow>& x,
                      const std::vector<int>& y, const SvmConfig& cfg,
                      std::vector<double>& alpha_io);

// Model persistence: a JSON record of weights, bias, the feature scaler,
// hyperparameters, and convergence metadata (keys sorted, floats
// round-trip exactly).  The scaler travels with the model so that scoring
// raw (unscaled) rows later applies the same standardization.
void save_model(const LinearModel& model, const SvmConfig& cfg,
                const Scaler& scaler, const std::filesystem::path& path);

struct LoadedModel {
  LinearModel model;
  SvmConfig config;
  Scaler scaler;
};

LoadedModel load_model(const std::filesystem::path& path);

}  // namespace cellmend
