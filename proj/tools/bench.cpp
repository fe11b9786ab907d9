// Benchmark comparing the serial reference kernels against their OpenMP
// counterparts.  Also asserts the two variants agree bit for bit, which is
// the whole point of the per-work-item stream design.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellmend/dataset.hpp"
#include "cellmend/metrics.hpp"
#include "cellmend/parallel.hpp"
#include "cellmend/simulate.hpp"
#include "cellmend/svm.hpp"

namespace {

using namespace cellmend;
using Clock = std::chrono::steady_clock;

template <typename Fn>
double best_ms(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

bool report(const std::string& name, double serial_ms, double parallel_ms,
            bool identical) {
  std::cout << name << ": serial " << serial_ms << " ms, openmp "
            << parallel_ms << " ms, speedup "
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
            << (identical ? "" : "  << OUTPUT MISMATCH >>") << "\n";
  return identical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cellmend kernel benchmark: serial reference vs OpenMP"};
  int scale = 10;
  int repeats = 5;
  app.add_option("--scale", scale, "Dataset size multiplier")
      ->capture_default_str();
  app.add_option("--repeats", repeats, "Timing repeats (best is reported)")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  SimConfig cfg = default_scenario();
  cfg.n_fault *= scale;
  cfg.n_ok *= scale;
  const std::size_t n =
      static_cast<std::size_t>(cfg.n_fault + cfg.n_ok);

  std::cout << "openmp: " << (parallel::openmp_enabled() ? "yes" : "no")
            << ", threads: " << parallel::thread_count() << ", rows: " << n
            << "\n";

  bool ok = true;

  // Row generation.
  std::vector<FeatureRow> rows_s(n), rows_p(n);
  const double gen_s =
      best_ms(repeats, [&] { parallel::generate_rows_serial(cfg, rows_s); });
  const double gen_p =
      best_ms(repeats, [&] { parallel::generate_rows_parallel(cfg, rows_p); });
  ok &= report("generate_rows", gen_s, gen_p,
               std::memcmp(rows_s.data(), rows_p.data(),
                           n * sizeof(FeatureRow)) == 0);

  // Pairwise distances over the fault rows.
  const std::size_t nf = static_cast<std::size_t>(cfg.n_fault);
  const std::vector<FeatureRow> fault_rows(rows_s.begin(),
                                           rows_s.begin() + nf);
  std::vector<double> d2_s(nf * nf), d2_p(nf * nf);
  const double d2s = best_ms(
      repeats, [&] { parallel::pairwise_sq_dists_serial(fault_rows, d2_s); });
  const double d2p = best_ms(repeats, [&] {
    parallel::pairwise_sq_dists_parallel(fault_rows, d2_p);
  });
  ok &= report("pairwise_sq_dists", d2s, d2p,
               std::memcmp(d2_s.data(), d2_p.data(),
                           d2_s.size() * sizeof(double)) == 0);

  // Batch scoring with an arbitrary fixed model.
  LinearModel model;
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    model.w[k] = 0.25 * static_cast<double>(k + 1);
  }
  model.b = -0.5;
  std::vector<double> scores_s, scores_p;
  const double sc_s = best_ms(
      repeats, [&] { parallel::batch_scores_serial(model, rows_s, scores_s); });
  const double sc_p = best_ms(repeats, [&] {
    parallel::batch_scores_parallel(model, rows_s, scores_p);
  });
  ok &= report("batch_scores", sc_s, sc_p,
               std::memcmp(scores_s.data(), scores_p.data(),
                           scores_s.size() * sizeof(double)) == 0);

  // Confusion tally at threshold 0.
  std::vector<int> labels(n, kLabelOk);
  for (std::size_t i = 0; i < nf; ++i) labels[i] = kLabelFault;
  Confusion tally_s, tally_p;
  const double ty_s = best_ms(
      repeats, [&] { tally_s = parallel::tally_serial(labels, scores_s, 0.0); });
  const double ty_p = best_ms(repeats, [&] {
    tally_p = parallel::tally_parallel(labels, scores_s, 0.0);
  });
  ok &= report("tally", ty_s, ty_p,
               tally_s.tp == tally_p.tp && tally_s.fn == tally_p.fn &&
                   tally_s.fp == tally_p.fp && tally_s.tn == tally_p.tn);

  if (!ok) {
    std::cerr << "bench: serial and OpenMP outputs differ\n";
    return 1;
  }
  return 0;
}
