#pragma once

#include <cstdint>
#include <vector>

// Evaluation metrics for the fault-detection task.  Fault (label 0) is the
// positive class: a true positive is a fault recognised as a fault.

namespace cellmend {

struct Confusion {
  std::int64_t tp = 0;  // fault predicted fault
  std::int64_t fn = 0;  // fault predicted fault-free (missed fault)
  std::int64_t fp = 0;  // fault-free predicted fault (false alarm)
  std::int64_t tn = 0;  // fault-free predicted fault-free

  std::int64_t positives() const { return tp + fn; }
  std::int64_t negatives() const { return fp + tn; }
};

// Misclassification cost table: cost(i, j) = cost of predicting class j for a
// true class-i sample.  Diagonal entries are zero by convention; c10 = 1 is
// the unit, and the cost ratio is c01 / c10.
struct CostMatrix {
  double c00 = 0.0;
  double c01 = 1.0;  // missed fault
  double c10 = 1.0;  // false alarm
  double c11 = 0.0;

  double ratio() const;  // c01 / c10, requires c10 > 0
};

// Exact counts from predicted labels vs ground truth (both in {0, 1}).
Confusion confusion(const std::vector<int>& truth,
                    const std::vector<int>& predicted);

// Threshold rule: predict fault iff score >= threshold.
Confusion confusion_at(const std::vector<int>& y_true,
                       const std::vector<double>& scores, double threshold);

// Sum of per-sample costs given a confusion matrix.
double total_cost(const Confusion& c, const CostMatrix& cost);

double precision(const Confusion& c);
double recall(const Confusion& c);  // fault-class recall (TPR)
double specificity(const Confusion& c);
double f_measure(const Confusion& c, double beta = 1.0);
double g_mean(const Confusion& c);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  double threshold = 0.0;
};

// ROC curve over distinct descending score thresholds.  Tied scores collapse
// into a single point, and the curve is anchored at (0, 0) with threshold
// +infinity; the final point is always (1, 1).
std::vector<RocPoint> roc_curve(const std::vector<int>& y_true,
                                const std::vector<double>& scores);

// Area under the ROC curve by trapezoidal integration.  Internally counted
// with integers, which makes it exactly the Mann-Whitney statistic: the
// probability a random fault outscores a random fault-free sample, ties at
// half credit.
double auc(const std::vector<int>& y_true, const std::vector<double>& scores);

struct PrPoint {
  double recall = 0.0;
  double precision = 0.0;
  double threshold = 0.0;
};

// Precision-recall pairs over distinct descending thresholds, ending at the
// first threshold reaching full recall.
std::vector<PrPoint> pr_curve(const std::vector<int>& y_true,
                              const std::vector<double>& scores);

}  // namespace cellmend
