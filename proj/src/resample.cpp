#include "cellmend/resample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cellmend/parallel.hpp"
#include "cellmend/rng.hpp"

namespace cellmend {

namespace {

std::vector<std::size_t> indices_of(const Dataset& ds, int label) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.y[i] == label) idx.push_back(i);
  }
  return idx;
}

// Append `extra` duplicates of minority rows, the t-th (t = t0, t0+1, ...)
// choosing its source via substream (seed, kStreamResample + t).
void append_duplicates(Dataset& out, const Dataset& ds,
                       const std::vector<std::size_t>& minority,
                       std::size_t extra, std::uint64_t seed) {
  for (std::size_t t = 0; t < extra; ++t) {
    auto stream = rng::substream(seed, rng::kStreamResample + t);
    const std::size_t pick =
        static_cast<std::size_t>(stream.next_below(minority.size()));
    const std::size_t src = minority[pick];
    out.push_back(ds.x[src], ds.y[src]);
  }
}

// Uniform without-replacement choice of `keep` majority rows: Fisher-Yates
// prefix on the index list, then restored to original order.
std::vector<char> majority_keep_mask(const Dataset& ds,
                                     const std::vector<std::size_t>& majority,
                                     std::size_t keep, std::uint64_t seed) {
  std::vector<std::size_t> idx = majority;
  auto stream = rng::substream(seed, rng::kStreamUndersample);
  for (std::size_t i = 0; i < keep; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(stream.next_below(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  std::vector<char> in_keep(ds.size(), 0);
  for (std::size_t i = 0; i < keep; ++i) in_keep[idx[i]] = 1;
  return in_keep;
}

}  // namespace

void validate(const ResampleConfig& cfg) {
  if (!(cfg.target_ratio > 0.0 && cfg.target_ratio <= 1.0)) {
    throw std::invalid_argument("resample: target_ratio must be in (0, 1]");
  }
  if (cfg.k < 1) {
    throw std::invalid_argument("resample: k must be >= 1");
  }
}

int minority_label(const Dataset& ds) {
  const std::size_t n_fault = ds.count(kLabelFault);
  const std::size_t n_ok = ds.count(kLabelOk);
  if (n_fault == 0 || n_ok == 0) {
    throw std::invalid_argument("resample: need both classes");
  }
  return n_fault <= n_ok ? kLabelFault : kLabelOk;
}

Dataset oversample(const Dataset& ds, const ResampleConfig& cfg) {
  validate(cfg);
  const int mino = minority_label(ds);
  const auto minority = indices_of(ds, mino);
  const std::size_t n_maj = ds.size() - minority.size();
  const auto target = static_cast<std::size_t>(
      std::floor(cfg.target_ratio * static_cast<double>(n_maj)));
  if (target < minority.size()) {
    throw std::invalid_argument(
        "oversample: target minority count below current count");
  }
  Dataset out = ds;
  append_duplicates(out, ds, minority, target - minority.size(), cfg.seed);
  return out;
}

Dataset undersample(const Dataset& ds, const ResampleConfig& cfg) {
  validate(cfg);
  const int mino = minority_label(ds);
  const auto minority = indices_of(ds, mino);
  const auto majority =
      indices_of(ds, mino == kLabelFault ? kLabelOk : kLabelFault);
  const auto keep = static_cast<std::size_t>(std::floor(
      static_cast<double>(minority.size()) / cfg.target_ratio));
  if (keep == 0) {
    throw std::invalid_argument("undersample: would keep zero majority rows");
  }
  if (keep > majority.size()) {
    throw std::invalid_argument(
        "undersample: target exceeds current majority count");
  }
  const auto in_keep = majority_keep_mask(ds, majority, keep, cfg.seed);
  Dataset out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.y[i] == mino || in_keep[i]) out.push_back(ds.x[i], ds.y[i]);
  }
  return out;
}

Dataset combined_resample(const Dataset& ds, const ResampleConfig& cfg,
                          double midpoint) {
  validate(cfg);
  if (!(midpoint >= 0.0 && midpoint <= 1.0)) {
    throw std::invalid_argument("combined: midpoint must be in [0, 1]");
  }
  const int mino = minority_label(ds);
  const double n_min = static_cast<double>(ds.count(mino));
  const double n_maj = static_cast<double>(ds.size()) - n_min;
  const auto m = static_cast<std::size_t>(
      std::llround(n_maj * std::pow(n_min / n_maj, midpoint)));

  // Undersample the majority down to m, then duplicate minority rows up to m.
  Dataset shrunk;
  {
    const auto majority =
        indices_of(ds, mino == kLabelFault ? kLabelOk : kLabelFault);
    const auto in_keep = majority_keep_mask(ds, majority, m, cfg.seed);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds.y[i] == mino || in_keep[i]) shrunk.push_back(ds.x[i], ds.y[i]);
    }
  }
  const auto minority = indices_of(shrunk, mino);
  Dataset out = shrunk;
  append_duplicates(out, shrunk, minority, m - minority.size(), cfg.seed);
  return out;
}

std::vector<std::vector<std::size_t>> knn_table(
    const std::vector<FeatureRow>& rows, int k) {
  if (k < 1) {
    throw std::invalid_argument("knn_table: k must be >= 1");
  }
  const std::size_t n = rows.size();
  std::vector<double> d2(n * n, 0.0);
  parallel::pairwise_sq_dists(rows, d2);

  std::vector<std::vector<std::size_t>> table(n);
  const std::size_t want = std::min<std::size_t>(
      static_cast<std::size_t>(k), n > 0 ? n - 1 : 0);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) order.push_back(j);
    }
    // Distance ties break toward the lower index: (d2, j) lexicographic.
    std::partial_sort(order.begin(),
                      order.begin() + static_cast<std::ptrdiff_t>(want),
                      order.end(), [&](std::size_t a, std::size_t b) {
                        const double da = d2[i * n + a];
                        const double db = d2[i * n + b];
                        return da != db ? da < db : a < b;
                      });
    table[i].assign(order.begin(),
                    order.begin() + static_cast<std::ptrdiff_t>(want));
  }
  return table;
}

SmoteResult smote(const Dataset& ds, const ResampleConfig& cfg) {
  validate(cfg);
  const int mino = minority_label(ds);
  const auto minority = indices_of(ds, mino);
  if (minority.size() < 2) {
    throw std::invalid_argument("smote: need at least two minority rows");
  }
  const std::size_t n_maj = ds.size() - minority.size();
  const auto target = static_cast<std::size_t>(
      std::floor(cfg.target_ratio * static_cast<double>(n_maj)));
  if (target < minority.size()) {
    throw std::invalid_argument(
        "smote: target minority count below current count");
  }
  const std::size_t extra = target - minority.size();

  std::vector<FeatureRow> min_rows;
  min_rows.reserve(minority.size());
  for (std::size_t idx : minority) min_rows.push_back(ds.x[idx]);
  const auto neighbors = knn_table(min_rows, cfg.k);

  SmoteResult res;
  res.data = ds;
  res.parents.reserve(extra);
  for (std::size_t t = 0; t < extra; ++t) {
    auto stream = rng::substream(cfg.seed, rng::kStreamResample + t);
    const auto i = static_cast<std::size_t>(stream.next_below(minority.size()));
    const auto& row_neighbors = neighbors[i];
    const auto pick =
        static_cast<std::size_t>(stream.next_below(row_neighbors.size()));
    const std::size_t j = row_neighbors[pick];
    const double u = stream.next_unit();

    FeatureRow synth;
    const FeatureRow& xi = min_rows[i];
    const FeatureRow& xj = min_rows[j];
    for (std::size_t f = 0; f < kNumFeatures; ++f) {
      const double d = cfg.mode == SmoteMode::kExtrapolate ? xi[f] - xj[f]
                                                           : xj[f] - xi[f];
      synth[f] = xi[f] + u * d;
    }
    res.data.push_back(synth, mino);
    res.parents.push_back({minority[i], minority[j], u});
  }
  return res;
}

}  // namespace cellmend
