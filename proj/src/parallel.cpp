#include "cellmend/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cellmend/rng.hpp"

namespace cellmend::parallel {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

FeatureRow make_row(const SimConfig& cfg, std::size_t i) {
  const bool fault = i < static_cast<std::size_t>(cfg.n_fault);
  const auto& params = fault ? cfg.fault : cfg.ok;
  auto stream = rng::substream(cfg.seed, rng::kStreamGenerate + i);
  FeatureRow row;
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    const double v = params[k].mean + params[k].stddev * stream.next_gaussian();
    row[k] = std::clamp(v, cfg.clamp_lo[k], cfg.clamp_hi[k]);
  }
  return row;
}

void check_row_count(const SimConfig& cfg, const std::vector<FeatureRow>& rows) {
  const auto want =
      static_cast<std::size_t>(cfg.n_fault) + static_cast<std::size_t>(cfg.n_ok);
  if (rows.size() != want) {
    throw std::invalid_argument("generate_rows: output size mismatch");
  }
}

}  // namespace

void generate_rows_serial(const SimConfig& cfg, std::vector<FeatureRow>& rows) {
  check_row_count(cfg, rows);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = make_row(cfg, i);
}

void generate_rows_parallel(const SimConfig& cfg,
                            std::vector<FeatureRow>& rows) {
  check_row_count(cfg, rows);
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] =
        make_row(cfg, static_cast<std::size_t>(i));
  }
}

void generate_rows(const SimConfig& cfg, std::vector<FeatureRow>& rows) {
#ifdef _OPENMP
  generate_rows_parallel(cfg, rows);
#else
  generate_rows_serial(cfg, rows);
#endif
}

namespace {

double sq_dist(const FeatureRow& a, const FeatureRow& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

void check_d2(const std::vector<FeatureRow>& rows, std::vector<double>& d2) {
  if (d2.size() != rows.size() * rows.size()) {
    throw std::invalid_argument("pairwise_sq_dists: output size mismatch");
  }
}

}  // namespace

void pairwise_sq_dists_serial(const std::vector<FeatureRow>& rows,
                              std::vector<double>& d2) {
  check_d2(rows, d2);
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    d2[i * n + i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = sq_dist(rows[i], rows[j]);
      d2[i * n + j] = d;
      d2[j * n + i] = d;
    }
  }
}

void pairwise_sq_dists_parallel(const std::vector<FeatureRow>& rows,
                                std::vector<double>& d2) {
  check_d2(rows, d2);
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    // Full row per iteration: disjoint writes, no symmetry race.
    const auto ui = static_cast<std::size_t>(i);
    for (std::int64_t j = 0; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      d2[ui * static_cast<std::size_t>(n) + uj] =
          i == j ? 0.0 : sq_dist(rows[ui], rows[uj]);
    }
  }
}

void pairwise_sq_dists(const std::vector<FeatureRow>& rows,
                       std::vector<double>& d2) {
#ifdef _OPENMP
  pairwise_sq_dists_parallel(rows, d2);
#else
  pairwise_sq_dists_serial(rows, d2);
#endif
}

void batch_scores_serial(const LinearModel& model,
                         const std::vector<FeatureRow>& rows,
                         std::vector<double>& out) {
  out.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = model.score(rows[i]);
}

void batch_scores_parallel(const LinearModel& model,
                           const std::vector<FeatureRow>& rows,
                           std::vector<double>& out) {
  out.resize(rows.size());
  const auto n = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        model.score(rows[static_cast<std::size_t>(i)]);
  }
}

void batch_scores(const LinearModel& model, const std::vector<FeatureRow>& rows,
                  std::vector<double>& out) {
#ifdef _OPENMP
  batch_scores_parallel(model, rows, out);
#else
  batch_scores_serial(model, rows, out);
#endif
}

Confusion tally_serial(const std::vector<int>& y_true,
                       const std::vector<double>& scores, double threshold) {
  return confusion_at(y_true, scores, threshold);
}

Confusion tally_parallel(const std::vector<int>& y_true,
                         const std::vector<double>& scores, double threshold) {
  if (y_true.size() != scores.size()) {
    throw std::invalid_argument("tally: label/score size mismatch");
  }
  std::int64_t tp = 0, fn = 0, fp = 0, tn = 0;
  const auto n = static_cast<std::int64_t>(y_true.size());
#pragma omp parallel for schedule(static) reduction(+ : tp, fn, fp, tn)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const bool predicted_fault = scores[ui] >= threshold;
    if (y_true[ui] == kLabelFault) {
      if (predicted_fault) {
        ++tp;
      } else {
        ++fn;
      }
    } else {
      if (predicted_fault) {
        ++fp;
      } else {
        ++tn;
      }
    }
  }
  Confusion c;
  c.tp = tp;
  c.fn = fn;
  c.fp = fp;
  c.tn = tn;
  return c;
}

Confusion tally(const std::vector<int>& y_true,
                const std::vector<double>& scores, double threshold) {
#ifdef _OPENMP
  return tally_parallel(y_true, scores, threshold);
#else
  return tally_serial(y_true, scores, threshold);
#endif
}

}  // namespace cellmend::parallel
