#pragma once

#include <cstdint>
#include <vector>

#include "cellmend/dataset.hpp"

// Class-rebalancing transforms: random oversampling (duplicate minority
// rows), random undersampling (drop majority rows), their combination, and
// SMOTE (synthesize minority points along lines through nearest neighbors).
//
// All methods retain input rows in their original order; oversampling and
// SMOTE append their new rows after the originals.  Every random choice for
// the t-th new row comes from the substream (seed, t), so output is
// deterministic and independent of generation order — and the t-th SMOTE
// synthetic picks the same source row as the t-th oversampling duplicate for
// the same seed, making the two methods directly comparable.

namespace cellmend {

enum class SmoteMode {
  // X_n = X_i + u * (X_i - X_j): extrapolates away from the neighbor.
  kExtrapolate,
  // X_n = X_i + u * (X_j - X_i): interpolates toward the neighbor.
  kInterpolate,
};

struct ResampleConfig {
  double target_ratio = 1.0;  // desired minority/majority count ratio, (0, 1]
  int k = 5;                  // SMOTE neighbor count
  SmoteMode mode = SmoteMode::kExtrapolate;
  std::uint64_t seed = 0;
};

void validate(const ResampleConfig& cfg);

// Which label currently holds the minority (fault wins ties).
int minority_label(const Dataset& ds);

// Duplicate minority rows (uniformly, with replacement) until the minority
// count reaches floor(target_ratio * majority).  Errors if that target is
// below the current minority count.
Dataset oversample(const Dataset& ds, const ResampleConfig& cfg);

// Keep a uniform without-replacement subset of the majority of size
// floor(minority / target_ratio); errors if that exceeds the majority count
// or is zero.
Dataset undersample(const Dataset& ds, const ResampleConfig& cfg);

// Undersample the majority to M = round(majority * (minority/majority)^midpoint),
// then oversample the minority up to M; the result is balanced.
Dataset combined_resample(const Dataset& ds, const ResampleConfig& cfg,
                          double midpoint = 0.5);

// Exact k-nearest-neighbor table (Euclidean) among the given rows; self
// excluded, ties broken toward the lower row index, row r holds
// min(k, n - 1) neighbor indices in increasing-distance order.
std::vector<std::vector<std::size_t>> knn_table(
    const std::vector<FeatureRow>& rows, int k);

struct SmoteParent {
  std::size_t i = 0;  // input-dataset index of the source minority row
  std::size_t j = 0;  // input-dataset index of the chosen neighbor
  double u = 0.0;     // mixing coefficient, strictly inside (0, 1)
};

struct SmoteResult {
  Dataset data;
  // parents[t] documents how synthetic row t (appended in order after the
  // originals) was built.
  std::vector<SmoteParent> parents;
};

// Synthesize floor(target_ratio * majority) - minority new minority rows.
SmoteResult smote(const Dataset& ds, const ResampleConfig& cfg);

}  // namespace cellmend
