#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "cellmend/dataset.hpp"

using namespace cellmend;

namespace {

// Rows carry their original index in feature 0 so partitions can be traced.
Dataset tagged_dataset(std::size_t n_fault, std::size_t n_ok) {
  Dataset ds;
  for (std::size_t i = 0; i < n_fault + n_ok; ++i) {
    FeatureRow row{};
    row[0] = static_cast<double>(i);
    ds.push_back(row, i < n_fault ? kLabelFault : kLabelOk);
  }
  return ds;
}

}  // namespace

TEST_CASE("count and count_label agree with hand tallies") {
  const Dataset ds = tagged_dataset(3, 5);
  CHECK(ds.size() == 8);
  CHECK(ds.count(kLabelFault) == 3);
  CHECK(ds.count(kLabelOk) == 5);
  CHECK(count_label(ds, kLabelFault) == 3);
  CHECK(count_label(ds, kLabelOk) == 5);
}

TEST_CASE("imbalance_ratio is minority over majority regardless of label") {
  CHECK(imbalance_ratio(tagged_dataset(2, 8)) == doctest::Approx(0.25));
  // Flip roles: 8 faults vs 2 fault-free still gives 0.25.
  Dataset flipped;
  for (int i = 0; i < 10; ++i) {
    flipped.push_back(FeatureRow{}, i < 8 ? kLabelFault : kLabelOk);
  }
  CHECK(imbalance_ratio(flipped) == doctest::Approx(0.25));
  CHECK(imbalance_ratio(tagged_dataset(117, 3363)) ==
        doctest::Approx(117.0 / 3363.0));
  CHECK_THROWS_AS(imbalance_ratio(Dataset{}), std::invalid_argument);
}

TEST_CASE("split is stratified with rounded per-class test counts") {
  const Dataset ds = tagged_dataset(117, 3363);
  const SplitResult split = split_dataset(ds, 0.2, 5);

  CHECK(split.test.count(kLabelFault) == 23);  // round(0.2 * 117)
  CHECK(split.test.count(kLabelOk) == 673);    // round(0.2 * 3363)
  CHECK(split.test.size() == 696);
  CHECK(split.train.size() == 2784);
  CHECK(split.train.count(kLabelFault) == 94);
  CHECK(split.train.count(kLabelOk) == 2690);

  const SplitResult tiny = split_dataset(tagged_dataset(10, 10), 0.5, 1);
  CHECK(tiny.test.count(kLabelFault) == 5);
  CHECK(tiny.test.count(kLabelOk) == 5);
}

TEST_CASE("split partitions the rows exactly, preserving original order") {
  const Dataset ds = tagged_dataset(20, 80);
  const SplitResult split = split_dataset(ds, 0.25, 9);

  std::set<double> seen;
  for (const auto& part : {split.train, split.test}) {
    double prev = -1.0;
    for (const auto& row : part.x) {
      CHECK(row[0] > prev);  // original order within each partition
      prev = row[0];
      CHECK(seen.insert(row[0]).second);  // no duplicates across partitions
    }
  }
  CHECK(seen.size() == 100);
}

TEST_CASE("split is deterministic in the seed and varies across seeds") {
  const Dataset ds = tagged_dataset(30, 170);
  const SplitResult a = split_dataset(ds, 0.2, 42);
  const SplitResult b = split_dataset(ds, 0.2, 42);
  REQUIRE(a.test.size() == b.test.size());
  for (std::size_t i = 0; i < a.test.size(); ++i) {
    CHECK(a.test.x[i][0] == b.test.x[i][0]);
  }

  const SplitResult c = split_dataset(ds, 0.2, 43);
  bool any_difference = false;
  for (std::size_t i = 0; i < a.test.size(); ++i) {
    if (a.test.x[i][0] != c.test.x[i][0]) any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("split handles the fraction endpoints and rejects bad fractions") {
  const Dataset ds = tagged_dataset(5, 15);
  CHECK(split_dataset(ds, 0.0, 1).test.size() == 0);
  CHECK(split_dataset(ds, 1.0, 1).train.size() == 0);
  CHECK_THROWS_AS(split_dataset(ds, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(split_dataset(ds, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(split_dataset(ds, std::nan(""), 1), std::invalid_argument);
}
