#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Core dataset model: fixed seven-KPI feature rows with a binary label.
// Label 0 = fault (the minority, treated as the positive class everywhere),
// label 1 = fault-free.

namespace cellmend {

inline constexpr int kNumFeatures = 7;

using FeatureRow = std::array<double, kNumFeatures>;

// Column names, in on-disk order (after the leading label column).
inline constexpr std::array<const char*, kNumFeatures> kFeatureNames = {
    "retainability", "ho_success_rate", "rsrp",    "rsrq",
    "sinr",          "throughput",      "distance"};

inline constexpr int kLabelFault = 0;
inline constexpr int kLabelOk = 1;

struct Dataset {
  std::vector<FeatureRow> x;
  std::vector<int> y;

  std::size_t size() const { return y.size(); }
  std::size_t count(int label) const;

  void push_back(const FeatureRow& row, int label) {
    x.push_back(row);
    y.push_back(label);
  }
};

// Minority/majority bookkeeping. Fault is the minority by construction in
// this project, but the helpers stay label-driven so tests can invert roles.
std::size_t count_label(const Dataset& ds, int label);

// Imbalance ratio count(minority) / count(majority), in (0, 1] for non-empty
// classes.
double imbalance_ratio(const Dataset& ds);

struct SplitResult {
  Dataset train;
  Dataset test;
};

// Stratified split: within each class, a seeded uniform shuffle selects
// round(test_fraction * n_c) rows for the test set; both partitions keep
// their rows in original dataset order.  test_fraction in [0, 1].
SplitResult split_dataset(const Dataset& ds, double test_fraction,
                          std::uint64_t seed);

}  // namespace cellmend
