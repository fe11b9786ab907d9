#pragma once

#include <vector>

#include "cellmend/dataset.hpp"
#include "cellmend/metrics.hpp"
#include "cellmend/simulate.hpp"
#include "cellmend/svm.hpp"

// Data-parallel kernels, each in two variants: a plain serial reference and
// an OpenMP version.  Both produce bit-identical results — every work item
// is independent (per-sample PRNG substreams, disjoint writes, or integer
// reductions), so thread count and scheduling cannot change the output.
// The unsuffixed entry points dispatch to OpenMP when compiled with it.
//
// SVM training stays deliberately serial: dual coordinate descent updates a
// shared weight vector sequentially, and the training contract promises a
// fixed iteration order.

namespace cellmend::parallel {

// True when built with OpenMP.
bool openmp_enabled();
int thread_count();

// Dataset row generation (labels are handled by the caller; rows.size()
// must equal cfg.n_fault + cfg.n_ok; row i < n_fault is a fault row).
void generate_rows_serial(const SimConfig& cfg, std::vector<FeatureRow>& rows);
void generate_rows_parallel(const SimConfig& cfg,
                            std::vector<FeatureRow>& rows);
void generate_rows(const SimConfig& cfg, std::vector<FeatureRow>& rows);

// Dense pairwise squared Euclidean distances; d2 must have size n*n and is
// written fully (diagonal = 0).
void pairwise_sq_dists_serial(const std::vector<FeatureRow>& rows,
                              std::vector<double>& d2);
void pairwise_sq_dists_parallel(const std::vector<FeatureRow>& rows,
                                std::vector<double>& d2);
void pairwise_sq_dists(const std::vector<FeatureRow>& rows,
                       std::vector<double>& d2);

// Linear scores for a batch of rows; out resized to rows.size().
void batch_scores_serial(const LinearModel& model,
                         const std::vector<FeatureRow>& rows,
                         std::vector<double>& out);
void batch_scores_parallel(const LinearModel& model,
                           const std::vector<FeatureRow>& rows,
                           std::vector<double>& out);
void batch_scores(const LinearModel& model, const std::vector<FeatureRow>& rows,
                  std::vector<double>& out);

// Confusion tally at a threshold (integer reduction).
Confusion tally_serial(const std::vector<int>& y_true,
                       const std::vector<double>& scores, double threshold);
Confusion tally_parallel(const std::vector<int>& y_true,
                         const std::vector<double>& scores, double threshold);
Confusion tally(const std::vector<int>& y_true,
                const std::vector<double>& scores, double threshold);

}  // namespace cellmend::parallel
