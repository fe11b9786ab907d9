#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cellmend/metrics.hpp"
#include "cellmend/parallel.hpp"
#include "cellmend/rng.hpp"
#include "cellmend/simulate.hpp"
#include "cellmend/svm.hpp"

using namespace cellmend;

namespace {

std::vector<FeatureRow> random_rows(std::size_t n, std::uint64_t seed) {
  std::vector<FeatureRow> rows(n);
  auto stream = rng::SplitMix64(seed);
  for (auto& row : rows) {
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      row[k] = stream.next_gaussian();
    }
  }
  return rows;
}

}  // namespace

TEST_CASE("thread bookkeeping is sane") {
  CHECK(parallel::thread_count() >= 1);
  if (!parallel::openmp_enabled()) {
    CHECK(parallel::thread_count() == 1);
  }
}

TEST_CASE("row generation: serial, parallel, and dispatch agree bitwise") {
  const SimConfig cfg = default_scenario();
  const std::size_t n = static_cast<std::size_t>(cfg.n_fault + cfg.n_ok);
  std::vector<FeatureRow> serial(n), parallel_rows(n), dispatched(n);
  parallel::generate_rows_serial(cfg, serial);
  parallel::generate_rows_parallel(cfg, parallel_rows);
  parallel::generate_rows(cfg, dispatched);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      CHECK(serial[i][k] == parallel_rows[i][k]);
      CHECK(serial[i][k] == dispatched[i][k]);
    }
  }
}

TEST_CASE("row generation validates the output size") {
  const SimConfig cfg = default_scenario();
  std::vector<FeatureRow> wrong(7);
  CHECK_THROWS_AS(parallel::generate_rows(cfg, wrong), std::invalid_argument);
}

TEST_CASE("pairwise distances: exact values, symmetry, zero diagonal") {
  std::vector<FeatureRow> rows(3);
  rows[0] = {0, 0, 0, 0, 0, 0, 0};
  rows[1] = {3, 4, 0, 0, 0, 0, 0};   // 3-4-5 triangle
  rows[2] = {0, 0, 2, 0, 0, 0, 0};
  std::vector<double> d2(9);
  parallel::pairwise_sq_dists(rows, d2);
  CHECK(d2[0 * 3 + 1] == 25.0);
  CHECK(d2[1 * 3 + 0] == 25.0);
  CHECK(d2[0 * 3 + 2] == 4.0);
  CHECK(d2[1 * 3 + 2] == 9.0 + 16.0 + 4.0);
  for (int i = 0; i < 3; ++i) CHECK(d2[i * 3 + i] == 0.0);
}

TEST_CASE("pairwise distances: serial and parallel agree bitwise") {
  const auto rows = random_rows(157, 99);
  std::vector<double> a(157 * 157), b(157 * 157), c(157 * 157);
  parallel::pairwise_sq_dists_serial(rows, a);
  parallel::pairwise_sq_dists_parallel(rows, b);
  parallel::pairwise_sq_dists(rows, c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(a[i] == c[i]);
  }
}

TEST_CASE("pairwise distances reject a wrongly sized output buffer") {
  const auto rows = random_rows(4, 1);
  std::vector<double> wrong(3);
  CHECK_THROWS_AS(parallel::pairwise_sq_dists(rows, wrong),
                  std::invalid_argument);
}

TEST_CASE("batch scoring agrees with the model and across variants") {
  const auto rows = random_rows(501, 12);
  LinearModel m;
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    m.w[k] = 0.1 * static_cast<double>(k) - 0.3;
  }
  m.b = 0.25;
  std::vector<double> serial, par, dispatched;
  parallel::batch_scores_serial(m, rows, serial);
  parallel::batch_scores_parallel(m, rows, par);
  parallel::batch_scores(m, rows, dispatched);
  REQUIRE(serial.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(serial[i] == m.score(rows[i]));
    CHECK(serial[i] == par[i]);
    CHECK(serial[i] == dispatched[i]);
  }
}

TEST_CASE("tally equals confusion_at on random scores") {
  auto stream = rng::SplitMix64(2718);
  std::vector<int> y(1234);
  std::vector<double> s(1234);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = static_cast<int>(stream.next_below(2));
    s[i] = stream.next_unit() - 0.4;
  }
  for (double threshold : {-0.2, 0.0, 0.1, 0.6}) {
    const Confusion expected = confusion_at(y, s, threshold);
    for (const Confusion& got :
         {parallel::tally_serial(y, s, threshold),
          parallel::tally_parallel(y, s, threshold),
          parallel::tally(y, s, threshold)}) {
      CHECK(got.tp == expected.tp);
      CHECK(got.fn == expected.fn);
      CHECK(got.fp == expected.fp);
      CHECK(got.tn == expected.tn);
    }
  }
}
