#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cellmend/simulate.hpp"

using namespace cellmend;

TEST_CASE("config validation rejects each broken field") {
  SimConfig cfg = default_scenario();
  CHECK_NOTHROW(validate(cfg));

  SimConfig bad = cfg;
  bad.n_fault = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = cfg;
  bad.n_fault = bad.n_ok + 1;  // fault class must stay the minority
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = cfg;
  bad.ok[2].stddev = -1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = cfg;
  bad.clamp_lo[3] = bad.clamp_hi[3] + 1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("generated dataset has fault rows first with exact counts") {
  SimConfig cfg = default_scenario();
  const Dataset ds = generate_dataset(cfg);
  REQUIRE(ds.size() == 3480);
  CHECK(ds.count(kLabelFault) == 117);
  CHECK(ds.count(kLabelOk) == 3363);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(ds.y[i] == (i < 117 ? kLabelFault : kLabelOk));
  }
}

TEST_CASE("every generated value respects its clamp range") {
  const SimConfig cfg = default_scenario();
  const Dataset ds = generate_dataset(cfg);
  for (const auto& row : ds.x) {
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      CHECK(row[k] >= cfg.clamp_lo[k]);
      CHECK(row[k] <= cfg.clamp_hi[k]);
    }
  }
}

TEST_CASE("tight clamps pin values exactly") {
  SimConfig cfg = default_scenario();
  cfg.n_fault = 10;
  cfg.n_ok = 20;
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    cfg.clamp_lo[k] = 5.0;
    cfg.clamp_hi[k] = 5.0;
  }
  const Dataset ds = generate_dataset(cfg);
  for (const auto& row : ds.x) {
    for (std::size_t k = 0; k < kNumFeatures; ++k) CHECK(row[k] == 5.0);
  }
}

TEST_CASE("generation is deterministic per seed and varies across seeds") {
  SimConfig cfg = default_scenario();
  const Dataset a = generate_dataset(cfg);
  const Dataset b = generate_dataset(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      CHECK(a.x[i][k] == b.x[i][k]);
    }
  }

  cfg.seed = 2;
  const Dataset c = generate_dataset(cfg);
  bool differs = false;
  for (std::size_t i = 0; i < a.size() && !differs; ++i) {
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      if (a.x[i][k] != c.x[i][k]) differs = true;
    }
  }
  CHECK(differs);
}

TEST_CASE("per-class sample means track the configured means") {
  const SimConfig cfg = default_scenario();
  const Dataset ds = generate_dataset(cfg);
  for (int label : {kLabelFault, kLabelOk}) {
    const auto& params = label == kLabelFault ? cfg.fault : cfg.ok;
    double n = 0.0;
    std::array<double, kNumFeatures> sums{};
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds.y[i] != label) continue;
      n += 1.0;
      for (std::size_t k = 0; k < kNumFeatures; ++k) sums[k] += ds.x[i][k];
    }
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      const double mean = sums[k] / n;
      // Five standard errors plus a small allowance for boundary clamping.
      const double tol =
          5.0 * params[k].stddev / std::sqrt(n) + 0.02 * params[k].stddev;
      CHECK(std::abs(mean - params[k].mean) <= tol);
    }
  }
}

TEST_CASE("default scenario degrades every fault-class mean") {
  const SimConfig cfg = default_scenario();
  // Quality KPIs drop under a fault; distance to served users grows.
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(cfg.fault[k].mean < cfg.ok[k].mean);
  }
  CHECK(cfg.fault[6].mean > cfg.ok[6].mean);
  CHECK(cfg.n_fault == 117);
  CHECK(cfg.n_ok == 3363);
}
