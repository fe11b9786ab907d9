#include "cellmend/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cellmend/rng.hpp"

namespace cellmend {

std::size_t Dataset::count(int label) const {
  return static_cast<std::size_t>(std::count(y.begin(), y.end(), label));
}

std::size_t count_label(const Dataset& ds, int label) {
  return ds.count(label);
}

double imbalance_ratio(const Dataset& ds) {
  const double n_fault = static_cast<double>(ds.count(kLabelFault));
  const double n_ok = static_cast<double>(ds.count(kLabelOk));
  const double minority = std::min(n_fault, n_ok);
  const double majority = std::max(n_fault, n_ok);
  if (majority == 0.0) {
    throw std::invalid_argument("imbalance_ratio: empty dataset");
  }
  return minority / majority;
}

SplitResult split_dataset(const Dataset& ds, double test_fraction,
                          std::uint64_t seed) {
  if (!(test_fraction >= 0.0 && test_fraction <= 1.0)) {
    throw std::invalid_argument("split_dataset: test_fraction outside [0, 1]");
  }
  const std::size_t n = ds.size();
  std::vector<char> in_test(n, 0);

  for (int label : {kLabelFault, kLabelOk}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (ds.y[i] == label) idx.push_back(i);
    }
    auto stream = rng::substream(
        seed, rng::kStreamSplit + static_cast<std::uint64_t>(label));
    // Fisher-Yates shuffle, then the first k shuffled rows become test rows.
    for (std::size_t i = idx.size(); i > 1; --i) {
      const std::uint64_t j = stream.next_below(i);
      std::swap(idx[i - 1], idx[j]);
    }
    const auto k = static_cast<std::size_t>(
        std::llround(test_fraction * static_cast<double>(idx.size())));
    for (std::size_t i = 0; i < k; ++i) in_test[idx[i]] = 1;
  }

  SplitResult out;
  for (std::size_t i = 0; i < n; ++i) {
    (in_test[i] ? out.test : out.train).push_back(ds.x[i], ds.y[i]);
  }
  return out;
}

}  // namespace cellmend
