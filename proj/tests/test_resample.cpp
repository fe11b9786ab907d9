#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "cellmend/resample.hpp"
#include "cellmend/rng.hpp"

using namespace cellmend;

namespace {

// Minority rows carry distinct values so duplicates can be traced back.
Dataset imbalanced(std::size_t n_fault, std::size_t n_ok) {
  Dataset ds;
  auto stream = rng::SplitMix64(404);
  for (std::size_t i = 0; i < n_fault + n_ok; ++i) {
    FeatureRow row;
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      row[k] = stream.next_gaussian();
    }
    ds.push_back(row, i < n_fault ? kLabelFault : kLabelOk);
  }
  return ds;
}

bool same_row(const FeatureRow& a, const FeatureRow& b) {
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("config validation bounds ratio and k") {
  ResampleConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.target_ratio = 0.0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.target_ratio = 1.5;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = ResampleConfig{};
  cfg.k = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("minority_label tracks counts and demands both classes") {
  CHECK(minority_label(imbalanced(3, 10)) == kLabelFault);
  Dataset inverted;
  for (int i = 0; i < 12; ++i) {
    inverted.push_back(FeatureRow{}, i < 9 ? kLabelFault : kLabelOk);
  }
  CHECK(minority_label(inverted) == kLabelOk);
  // A tie keeps fault as the minority by convention.
  CHECK(minority_label(imbalanced(4, 4)) == kLabelFault);
  Dataset single;
  single.push_back(FeatureRow{}, kLabelOk);
  CHECK_THROWS_AS(minority_label(single), std::invalid_argument);
}

TEST_CASE("oversample hits floor(ratio * majority) exactly") {
  const Dataset ds = imbalanced(117, 3363);
  ResampleConfig cfg;
  cfg.seed = 7;

  const Dataset balanced = oversample(ds, cfg);
  CHECK(balanced.count(kLabelFault) == 3363);
  CHECK(balanced.count(kLabelOk) == 3363);

  cfg.target_ratio = 0.1;  // floor(0.1 * 3363) = 336
  const Dataset partial = oversample(ds, cfg);
  CHECK(partial.count(kLabelFault) == 336);
  CHECK(partial.count(kLabelOk) == 3363);

  cfg.target_ratio = 0.01;  // target 33 < 117 current
  CHECK_THROWS_AS(oversample(ds, cfg), std::invalid_argument);
}

TEST_CASE("oversample appends copies of existing minority rows only") {
  const Dataset ds = imbalanced(9, 40);
  ResampleConfig cfg;
  cfg.seed = 3;
  const Dataset out = oversample(ds, cfg);

  // Original prefix is untouched.
  REQUIRE(out.size() == 80);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(out.y[i] == ds.y[i]);
    CHECK(same_row(out.x[i], ds.x[i]));
  }
  // Every appended row equals one of the original minority rows.
  for (std::size_t i = ds.size(); i < out.size(); ++i) {
    CHECK(out.y[i] == kLabelFault);
    bool found = false;
    for (std::size_t j = 0; j < 9; ++j) {
      if (same_row(out.x[i], ds.x[j])) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("undersample keeps floor(minority / ratio) majority rows in order") {
  const Dataset ds = imbalanced(117, 3363);
  ResampleConfig cfg;
  cfg.seed = 5;
  const Dataset out = undersample(ds, cfg);
  CHECK(out.count(kLabelFault) == 117);
  CHECK(out.count(kLabelOk) == 117);

  // All minority rows survive; kept majority rows appear in original order.
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool matched = false;
    while (cursor < ds.size()) {
      if (same_row(ds.x[cursor], out.x[i]) && ds.y[cursor] == out.y[i]) {
        matched = true;
        ++cursor;
        break;
      }
      ++cursor;
    }
    CHECK(matched);
  }

  cfg.target_ratio = 0.5;  // keep floor(117 / 0.5) = 234
  const Dataset half = undersample(ds, cfg);
  CHECK(half.count(kLabelOk) == 234);

  cfg.target_ratio = 0.01;  // would keep 11700 > 3363
  CHECK_THROWS_AS(undersample(ds, cfg), std::invalid_argument);
}

TEST_CASE("combined resampling lands both classes on the geometric midpoint") {
  const Dataset ds = imbalanced(117, 3363);
  ResampleConfig cfg;
  cfg.seed = 2;
  const Dataset out = combined_resample(ds, cfg);
  // round(3363 * sqrt(117 / 3363)) = 627.
  CHECK(out.count(kLabelFault) == 627);
  CHECK(out.count(kLabelOk) == 627);

  const Dataset tiny = combined_resample(imbalanced(2, 10), cfg);
  const auto m = static_cast<std::size_t>(
      std::llround(10.0 * std::sqrt(2.0 / 10.0)));
  CHECK(tiny.count(kLabelFault) == m);
  CHECK(tiny.count(kLabelOk) == m);

  CHECK_THROWS_AS(combined_resample(ds, cfg, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(combined_resample(ds, cfg, 2.0), std::invalid_argument);
}

TEST_CASE("knn table ranks by distance with index tie-breaks") {
  std::vector<FeatureRow> pts(4, FeatureRow{});
  pts[0][0] = 0.0;
  pts[1][0] = 1.0;
  pts[2][0] = 3.0;
  pts[3][0] = 7.0;
  const auto table = knn_table(pts, 2);
  REQUIRE(table.size() == 4);
  CHECK(table[0] == std::vector<std::size_t>{1, 2});
  CHECK(table[1] == std::vector<std::size_t>{0, 2});
  CHECK(table[2] == std::vector<std::size_t>{1, 0});
  CHECK(table[3] == std::vector<std::size_t>{2, 1});

  // Equidistant neighbors resolve toward the lower index.
  std::vector<FeatureRow> tie(3, FeatureRow{});
  tie[0][0] = 0.0;
  tie[1][0] = 1.0;
  tie[2][0] = 2.0;
  CHECK(knn_table(tie, 1)[1] == std::vector<std::size_t>{0});

  // k saturates at n - 1 neighbors.
  const auto all = knn_table(pts, 10);
  for (const auto& row : all) CHECK(row.size() == 3);

  CHECK_THROWS_AS(knn_table(pts, 0), std::invalid_argument);
}

TEST_CASE("smote synthesizes the exact count and logs exact parents") {
  const Dataset ds = imbalanced(117, 3363);
  ResampleConfig cfg;
  cfg.seed = 9;
  const SmoteResult res = smote(ds, cfg);

  CHECK(res.parents.size() == 3246);  // 3363 - 117
  CHECK(res.data.count(kLabelFault) == 3363);
  CHECK(res.data.count(kLabelOk) == 3363);

  // Original rows (both classes) are bit-identical to the input.
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(res.data.y[i] == ds.y[i]);
    CHECK(same_row(res.data.x[i], ds.x[i]));
  }

  const auto knn = knn_table(
      std::vector<FeatureRow>(ds.x.begin(), ds.x.begin() + 117), cfg.k);
  for (std::size_t t = 0; t < res.parents.size(); ++t) {
    const SmoteParent& p = res.parents[t];
    CHECK(p.u > 0.0);
    CHECK(p.u < 1.0);
    CHECK(p.i < 117);  // both parents are minority rows
    CHECK(p.j < 117);
    CHECK(p.i != p.j);
    // The neighbor really is one of X_i's k nearest.
    bool neighbor_ok = false;
    for (std::size_t cand : knn[p.i]) {
      if (cand == p.j) neighbor_ok = true;
    }
    CHECK(neighbor_ok);
    // Recomputing X_i + u (X_i - X_j) reproduces the stored row exactly.
    const FeatureRow& synth = res.data.x[ds.size() + t];
    CHECK(res.data.y[ds.size() + t] == kLabelFault);
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      const double expect = ds.x[p.i][k] + p.u * (ds.x[p.i][k] - ds.x[p.j][k]);
      CHECK(synth[k] == expect);
    }
  }
}

TEST_CASE("interpolating mode mixes toward the neighbor instead") {
  const Dataset ds = imbalanced(10, 30);
  ResampleConfig cfg;
  cfg.seed = 4;
  cfg.mode = SmoteMode::kInterpolate;
  const SmoteResult res = smote(ds, cfg);
  for (std::size_t t = 0; t < res.parents.size(); ++t) {
    const SmoteParent& p = res.parents[t];
    const FeatureRow& synth = res.data.x[ds.size() + t];
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      const double expect = ds.x[p.i][k] + p.u * (ds.x[p.j][k] - ds.x[p.i][k]);
      CHECK(synth[k] == expect);
    }
  }
  // Same seed, same draws: the two modes pick identical (i, j, u) and only
  // flip the mixing direction.
  cfg.mode = SmoteMode::kExtrapolate;
  const SmoteResult extra = smote(ds, cfg);
  REQUIRE(extra.parents.size() == res.parents.size());
  for (std::size_t t = 0; t < res.parents.size(); ++t) {
    CHECK(extra.parents[t].i == res.parents[t].i);
    CHECK(extra.parents[t].j == res.parents[t].j);
    CHECK(extra.parents[t].u == res.parents[t].u);
  }
}

TEST_CASE("the t-th duplicate and t-th synthetic share their source row") {
  // Both methods draw the source index as the first pick of substream t, so
  // method comparisons are paired sample by sample.
  const Dataset ds = imbalanced(25, 100);
  ResampleConfig cfg;
  cfg.seed = 12;
  const Dataset over = oversample(ds, cfg);
  const SmoteResult sm = smote(ds, cfg);
  REQUIRE(over.size() == sm.data.size());
  for (std::size_t t = 0; t < sm.parents.size(); ++t) {
    CHECK(same_row(over.x[ds.size() + t], ds.x[sm.parents[t].i]));
  }
}

TEST_CASE("smote rejects degenerate inputs") {
  ResampleConfig cfg;
  Dataset one_minority = imbalanced(1, 10);
  CHECK_THROWS_AS(smote(one_minority, cfg), std::invalid_argument);

  const Dataset ds = imbalanced(50, 100);
  cfg.target_ratio = 0.2;  // target 20 < 50 current minority
  CHECK_THROWS_AS(smote(ds, cfg), std::invalid_argument);
}

TEST_CASE("resampling is deterministic per seed and varies across seeds") {
  const Dataset ds = imbalanced(30, 200);
  ResampleConfig cfg;
  cfg.seed = 77;
  const Dataset a = oversample(ds, cfg);
  const Dataset b = oversample(ds, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(same_row(a.x[i], b.x[i]));
  }
  cfg.seed = 78;
  const Dataset c = oversample(ds, cfg);
  bool differs = false;
  for (std::size_t i = ds.size(); i < a.size(); ++i) {
    if (!same_row(a.x[i], c.x[i])) differs = true;
  }
  CHECK(differs);

  const SmoteResult s1 = smote(ds, cfg);
  const SmoteResult s2 = smote(ds, cfg);
  for (std::size_t t = 0; t < s1.parents.size(); ++t) {
    CHECK(s1.parents[t].u == s2.parents[t].u);
  }
}
