#include "cellmend/preprocess.hpp"

#include <cmath>
#include <stdexcept>

namespace cellmend {

Scaler Scaler::fit(const Dataset& ds) {
  const std::size_t n = ds.size();
  if (n == 0) {
    throw std::invalid_argument("scaler: cannot fit on an empty dataset");
  }
  Scaler s;
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    double sum = 0.0;
    for (const auto& row : ds.x) sum += row[k];
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (const auto& row : ds.x) {
      const double d = row[k] - mean;
      ss += d * d;
    }
    const double var = ss / static_cast<double>(n);
    s.mean[k] = mean;
    s.stddev[k] = var > 0.0 ? std::sqrt(var) : 1.0;
  }
  return s;
}

FeatureRow Scaler::transform(const FeatureRow& row) const {
  FeatureRow out;
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    out[k] = (row[k] - mean[k]) / stddev[k];
  }
  return out;
}

Dataset Scaler::transform(const Dataset& ds) const {
  Dataset out;
  out.x.reserve(ds.size());
  out.y = ds.y;
  for (const auto& row : ds.x) out.x.push_back(transform(row));
  return out;
}

}  // namespace cellmend
