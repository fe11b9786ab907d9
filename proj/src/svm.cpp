#include "cellmend/svm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cellmend/rng.hpp"

namespace cellmend {

namespace {

double dot_aug(const FeatureRow& a, const std::array<double, kNumFeatures>& w,
               double b) {
  double s = b;
  for (std::size_t k = 0; k < kNumFeatures; ++k) s += w[k] * a[k];
  return s;
}

}  // namespace

LinearModel train_svm(const std::vector<FeatureRow>& x,
                      const std::vector<int>& y, const SvmConfig& cfg,
                      std::vector<double>& alpha_io) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n) {
    throw std::invalid_argument("svm: empty input or label size mismatch");
  }
  if (!alpha_io.empty() && alpha_io.size() != n) {
    throw std::invalid_argument("svm: warm-start multipliers size mismatch");
  }
  if (cfg.C <= 0.0 || cfg.tolerance <= 0.0) {
    throw std::invalid_argument("svm: C and tolerance must be positive");
  }
  if (cfg.cost.c01 <= 0.0 || cfg.cost.c10 <= 0.0) {
    throw std::invalid_argument("svm: slack weights c01/c10 must be positive");
  }
  bool seen_fault = false;
  bool seen_ok = false;
  for (int label : y) {
    if (label == kLabelFault) {
      seen_fault = true;
    } else if (label == kLabelOk) {
      seen_ok = true;
    } else {
      throw std::invalid_argument("svm: labels must be 0 or 1");
    }
  }
  if (!seen_fault || !seen_ok) {
    throw std::invalid_argument("svm: training data must contain both classes");
  }

  // Per-sample sign and box bound U_i = C * kappa_i.
  std::vector<double> sign(n), upper(n), qii(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool fault = y[i] == kLabelFault;
    sign[i] = fault ? 1.0 : -1.0;
    upper[i] = cfg.C * (fault ? cfg.cost.c01 : cfg.cost.c10);
    double q = 1.0;  // augmented bias coordinate
    for (double v : x[i]) q += v * v;
    qii[i] = q;
  }

  std::array<double, kNumFeatures> w{};
  double b = 0.0;
  if (alpha_io.empty()) alpha_io.assign(n, 0.0);
  std::vector<double>& alpha = alpha_io;
  for (std::size_t i = 0; i < n; ++i) {
    // Project warm-start values into the feasible box (bounds change when
    // the slack weights do) and rebuild the primal iterate they induce.
    if (alpha[i] < 0.0) alpha[i] = 0.0;
    if (alpha[i] > upper[i]) alpha[i] = upper[i];
    if (alpha[i] != 0.0) {
      const double step = alpha[i] * sign[i];
      for (std::size_t k = 0; k < kNumFeatures; ++k) w[k] += step * x[i][k];
      b += step;
    }
  }

  // Visiting order: a fresh seeded shuffle every sweep.  Rows arrive sorted
  // by class, and with the shared (regularized-bias) coordinate a strictly
  // cyclic pass would push b one way through the first class block and back
  // through the second, which stalls convergence; mixing the classes breaks
  // that oscillation.  The shuffle stream is seeded by a constant, so the
  // whole iterate sequence is still a pure function of the inputs.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng::SplitMix64 schedule(rng::mix64(0x53564d5343484544ull));

  LinearModel model;
  double dual_obj = 0.0;  // minimization form: 1/2 ||w~||^2 - sum(alpha)
  double gap = 0.0;

  // The convergence certificate is always evaluated on the full problem, so
  // the shrinking heuristic below can never fake an optimum.
  const auto certified = [&]() {
    double norm2 = b * b;
    for (double v : w) norm2 += v * v;
    double hinge = 0.0;
    double alpha_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double margin = 1.0 - sign[i] * dot_aug(x[i], w, b);
      if (margin > 0.0) hinge += upper[i] * margin;
      alpha_sum += alpha[i];
    }
    const double primal = 0.5 * norm2 + hinge;
    const double dual_max = alpha_sum - 0.5 * norm2;  // maximization form
    dual_obj = -dual_max;
    gap = primal - dual_max;
    return gap <= cfg.tolerance * (1.0 + std::abs(dual_max));
  };

  // Shrinking: a variable pinned at a bound whose gradient kept it there last
  // sweep (relative to that sweep's extreme projected gradients) is dropped
  // from the active prefix of `order`; once the active set looks solved the
  // full set is restored and the certificate decides.  This mirrors the
  // classic dual coordinate descent recipe for linear SVMs.
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t active_n = n;
  double pg_max_old = inf;
  double pg_min_old = -inf;
  double inner_eps = 0.1;
  int sweep = 0;
  int next_check = 1;
  bool converged = false;
  while (sweep < cfg.max_iterations) {
    ++sweep;
    for (std::size_t t = 0; t + 1 < active_n; ++t) {
      const std::size_t r = t + schedule.next_below(active_n - t);
      std::swap(order[t], order[r]);
    }
    double pg_max = -inf;
    double pg_min = inf;
    std::size_t t = 0;
    while (t < active_n) {
      const std::size_t i = order[t];
      const double g = sign[i] * dot_aug(x[i], w, b) - 1.0;
      const bool at_lower = alpha[i] == 0.0;
      const bool at_upper = alpha[i] == upper[i];
      if ((at_lower && g > pg_max_old) || (at_upper && g < pg_min_old)) {
        --active_n;
        std::swap(order[t], order[active_n]);
        continue;  // revisit the index swapped into slot t
      }
      double pg = g;
      if (at_lower) {
        pg = std::min(g, 0.0);
      } else if (at_upper) {
        pg = std::max(g, 0.0);
      }
      pg_max = std::max(pg_max, pg);
      pg_min = std::min(pg_min, pg);
      if (pg != 0.0) {
        const double a_old = alpha[i];
        double a_new = a_old - g / qii[i];
        if (a_new < 0.0) a_new = 0.0;
        if (a_new > upper[i]) a_new = upper[i];
        const double delta = a_new - a_old;
        if (delta != 0.0) {
          alpha[i] = a_new;
          const double step = delta * sign[i];
          for (std::size_t k = 0; k < kNumFeatures; ++k) w[k] += step * x[i][k];
          b += step;
        }
      }
      ++t;
    }

    if (active_n == 0 || pg_max - pg_min <= inner_eps) {
      // Active set solved at the current precision: certify on everything.
      if (certified()) {
        converged = true;
        break;
      }
      if (active_n == n) inner_eps = std::max(inner_eps * 0.5, 1e-12);
      active_n = n;
      pg_max_old = inf;
      pg_min_old = -inf;
      continue;
    }
    pg_max_old = pg_max <= 0.0 ? inf : pg_max;
    pg_min_old = pg_min >= 0.0 ? -inf : pg_min;
    if (sweep >= next_check) {
      if (certified()) {
        converged = true;
        break;
      }
      next_check = sweep + std::min(1 + sweep / 4, 512);
    }
  }
  if (!converged) {
    converged = certified();  // exact state at the budget boundary
  }
  if (!converged) {
    throw std::runtime_error(
        "svm: no convergence within " + std::to_string(cfg.max_iterations) +
        " sweeps, duality gap " + std::to_string(gap));
  }
  model.w = w;
  model.b = b;
  model.objective = dual_obj;
  model.duality_gap = gap;
  model.iterations = sweep;
  return model;
}

LinearModel train_svm(const std::vector<FeatureRow>& x,
                      const std::vector<int>& y, const SvmConfig& cfg) {
  std::vector<double> alpha;
  return train_svm(x, y, cfg, alpha);
}

LinearModel train_svm(const Dataset& ds, const SvmConfig& cfg) {
  return train_svm(ds.x, ds.y, cfg);
}

void save_model(const LinearModel& model, const SvmConfig& cfg,
                const Scaler& scaler, const std::filesystem::path& path) {
  nlohmann::json j;
  j["weights"] = model.w;
  j["bias"] = model.b;
  j["scaler"] = {{"mean", scaler.mean}, {"stddev", scaler.stddev}};
  j["objective"] = model.objective;
  j["duality_gap"] = model.duality_gap;
  j["iterations"] = model.iterations;
  j["config"] = {{"C", cfg.C},
                 {"tolerance", cfg.tolerance},
                 {"max_iterations", cfg.max_iterations},
                 {"cost", {{"c00", cfg.cost.c00},
                           {"c01", cfg.cost.c01},
                           {"c10", cfg.cost.c10},
                           {"c11", cfg.cost.c11}}}};
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("model: cannot open for writing: " +
                             path.string());
  }
  f << j.dump(2) << '\n';
}

LoadedModel load_model(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("model: cannot open: " + path.string());
  }
  nlohmann::json j;
  f >> j;
  LoadedModel out;
  const auto& weights = j.at("weights");
  if (weights.size() != kNumFeatures) {
    throw std::runtime_error("model: expected " +
                             std::to_string(kNumFeatures) + " weights");
  }
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    out.model.w[k] = weights.at(k).get<double>();
  }
  out.model.b = j.at("bias").get<double>();
  const auto& scaler = j.at("scaler");
  const auto& mean = scaler.at("mean");
  const auto& stddev = scaler.at("stddev");
  if (mean.size() != kNumFeatures || stddev.size() != kNumFeatures) {
    throw std::runtime_error("model: scaler arrays must have " +
                             std::to_string(kNumFeatures) + " entries");
  }
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    out.scaler.mean[k] = mean.at(k).get<double>();
    out.scaler.stddev[k] = stddev.at(k).get<double>();
  }
  out.model.objective = j.value("objective", 0.0);
  out.model.duality_gap = j.value("duality_gap", 0.0);
  out.model.iterations = j.value("iterations", 0);
  const auto& c = j.at("config");
  out.config.C = c.at("C").get<double>();
  out.config.tolerance = c.at("tolerance").get<double>();
  out.config.max_iterations = c.at("max_iterations").get<int>();
  const auto& cost = c.at("cost");
  out.config.cost.c00 = cost.at("c00").get<double>();
  out.config.cost.c01 = cost.at("c01").get<double>();
  out.config.cost.c10 = cost.at("c10").get<double>();
  out.config.cost.c11 = cost.at("c11").get<double>();
  return out;
}

}  // namespace cellmend
