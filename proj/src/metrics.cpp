#include "cellmend/metrics.hpp"

#include <algorithm>

#include "cellmend/dataset.hpp"
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cellmend {

namespace {

void check_sizes(const std::vector<int>& y_true,
                 const std::vector<double>& scores) {
  if (y_true.size() != scores.size()) {
    throw std::invalid_argument("metrics: label/score size mismatch");
  }
  if (y_true.empty()) {
    throw std::invalid_argument("metrics: empty input");
  }
}

// Indices sorted by descending score; y cast to fault indicator.
struct Ranked {
  std::vector<std::size_t> order;
  std::int64_t n_pos = 0;
  std::int64_t n_neg = 0;
};

Ranked rank(const std::vector<int>& y_true, const std::vector<double>& scores) {
  Ranked r;
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  for (int y : y_true) {
    if (y == 0) {
      ++r.n_pos;
    } else {
      ++r.n_neg;
    }
  }
  return r;
}

}  // namespace

double CostMatrix::ratio() const {
  if (c10 <= 0.0) {
    throw std::invalid_argument("cost ratio undefined: c10 must be positive");
  }
  return c01 / c10;
}

Confusion confusion(const std::vector<int>& truth,
                    const std::vector<int>& predicted) {
  if (truth.empty() || truth.size() != predicted.size()) {
    throw std::invalid_argument(
        "confusion: need equal-length, non-empty label sequences");
  }
  Confusion c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int t = truth[i];
    const int p = predicted[i];
    if ((t != 0 && t != 1) || (p != 0 && p != 1)) {
      throw std::invalid_argument("confusion: labels must be 0 or 1");
    }
    if (t == kLabelFault) {
      (p == kLabelFault ? c.tp : c.fn)++;
    } else {
      (p == kLabelFault ? c.fp : c.tn)++;
    }
  }
  return c;
}

Confusion confusion_at(const std::vector<int>& y_true,
                       const std::vector<double>& scores, double threshold) {
  check_sizes(y_true, scores);
  Confusion c;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool predicted_fault = scores[i] >= threshold;
    if (y_true[i] == 0) {
      (predicted_fault ? c.tp : c.fn)++;
    } else {
      (predicted_fault ? c.fp : c.tn)++;
    }
  }
  return c;
}

double total_cost(const Confusion& c, const CostMatrix& cost) {
  return cost.c00 * static_cast<double>(c.tp) +
         cost.c01 * static_cast<double>(c.fn) +
         cost.c10 * static_cast<double>(c.fp) +
         cost.c11 * static_cast<double>(c.tn);
}

double precision(const Confusion& c) {
  const auto denom = c.tp + c.fp;
  return denom == 0 ? 0.0
                    : static_cast<double>(c.tp) / static_cast<double>(denom);
}

double recall(const Confusion& c) {
  const auto denom = c.tp + c.fn;
  return denom == 0 ? 0.0
                    : static_cast<double>(c.tp) / static_cast<double>(denom);
}

double specificity(const Confusion& c) {
  const auto denom = c.tn + c.fp;
  return denom == 0 ? 0.0
                    : static_cast<double>(c.tn) / static_cast<double>(denom);
}

double f_measure(const Confusion& c, double beta) {
  const double p = precision(c);
  const double r = recall(c);
  const double b2 = beta * beta;
  const double denom = b2 * p + r;
  return denom == 0.0 ? 0.0 : (1.0 + b2) * p * r / denom;
}

double g_mean(const Confusion& c) {
  return std::sqrt(recall(c) * specificity(c));
}

std::vector<RocPoint> roc_curve(const std::vector<int>& y_true,
                                const std::vector<double>& scores) {
  check_sizes(y_true, scores);
  const Ranked r = rank(y_true, scores);
  if (r.n_pos == 0 || r.n_neg == 0) {
    throw std::invalid_argument("roc_curve: need both classes");
  }
  std::vector<RocPoint> curve;
  curve.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::size_t i = 0;
  while (i < r.order.size()) {
    // Consume the whole tie group so equal scores yield one ROC point.
    const double s = scores[r.order[i]];
    while (i < r.order.size() && scores[r.order[i]] == s) {
      if (y_true[r.order[i]] == 0) {
        ++tp;
      } else {
        ++fp;
      }
      ++i;
    }
    curve.push_back({static_cast<double>(fp) / static_cast<double>(r.n_neg),
                     static_cast<double>(tp) / static_cast<double>(r.n_pos),
                     s});
  }
  return curve;
}

double auc(const std::vector<int>& y_true, const std::vector<double>& scores) {
  check_sizes(y_true, scores);
  const Ranked r = rank(y_true, scores);
  if (r.n_pos == 0 || r.n_neg == 0) {
    throw std::invalid_argument("auc: need both classes");
  }
  // Trapezoid area accumulated in integer units of (2 * P * N): each tie
  // group advances fp by `fp_g` while tp goes tp -> tp + tp_g, contributing
  // fp_g * (2 * tp + tp_g).  This equals pairwise win counting with ties at
  // half weight, so the trapezoidal and Mann-Whitney definitions coincide
  // exactly, not just within rounding.
  std::int64_t num = 0;
  std::int64_t tp = 0;
  std::size_t i = 0;
  while (i < r.order.size()) {
    const double s = scores[r.order[i]];
    std::int64_t tp_g = 0;
    std::int64_t fp_g = 0;
    while (i < r.order.size() && scores[r.order[i]] == s) {
      if (y_true[r.order[i]] == 0) {
        ++tp_g;
      } else {
        ++fp_g;
      }
      ++i;
    }
    num += fp_g * (2 * tp + tp_g);
    tp += tp_g;
  }
  return static_cast<double>(num) /
         (2.0 * static_cast<double>(r.n_pos) * static_cast<double>(r.n_neg));
}

std::vector<PrPoint> pr_curve(const std::vector<int>& y_true,
                              const std::vector<double>& scores) {
  check_sizes(y_true, scores);
  const Ranked r = rank(y_true, scores);
  if (r.n_pos == 0) {
    throw std::invalid_argument("pr_curve: need at least one fault sample");
  }
  std::vector<PrPoint> curve;
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::size_t i = 0;
  while (i < r.order.size()) {
    const double s = scores[r.order[i]];
    while (i < r.order.size() && scores[r.order[i]] == s) {
      if (y_true[r.order[i]] == 0) {
        ++tp;
      } else {
        ++fp;
      }
      ++i;
    }
    curve.push_back({static_cast<double>(tp) / static_cast<double>(r.n_pos),
                     static_cast<double>(tp) / static_cast<double>(tp + fp),
                     s});
    if (tp == r.n_pos) break;  // full recall reached; later points add nothing
  }
  return curve;
}

}  // namespace cellmend
