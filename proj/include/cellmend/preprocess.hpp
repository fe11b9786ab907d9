#pragma once

#include <array>

#include "cellmend/dataset.hpp"

// Feature standardization (z-score), fitted on training data only and then
// applied to both partitions, so no test-set statistics leak into training.

namespace cellmend {

struct Scaler {
  std::array<double, kNumFeatures> mean{};
  std::array<double, kNumFeatures> stddev{};  // population form (divide by n)

  // Constant columns keep stddev 1 so transforming is a no-op shift.
  static Scaler fit(const Dataset& ds);

  FeatureRow transform(const FeatureRow& row) const;
  Dataset transform(const Dataset& ds) const;
};

}  // namespace cellmend
