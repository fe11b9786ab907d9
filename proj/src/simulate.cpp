#include "cellmend/simulate.hpp"

#include <stdexcept>

#include "cellmend/parallel.hpp"

namespace cellmend {

void validate(const SimConfig& cfg) {
  if (cfg.n_fault <= 0 || cfg.n_ok <= 0) {
    throw std::invalid_argument("sim: class counts must be positive");
  }
  if (cfg.n_fault > cfg.n_ok) {
    throw std::invalid_argument("sim: fault class must be the minority");
  }
  for (int k = 0; k < kNumFeatures; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (cfg.ok[ku].stddev < 0.0 || cfg.fault[ku].stddev < 0.0) {
      throw std::invalid_argument("sim: negative stddev");
    }
    if (cfg.clamp_lo[ku] > cfg.clamp_hi[ku]) {
      throw std::invalid_argument("sim: inverted clamp range");
    }
  }
}

Dataset generate_dataset(const SimConfig& cfg) {
  validate(cfg);
  const std::size_t n =
      static_cast<std::size_t>(cfg.n_fault) + static_cast<std::size_t>(cfg.n_ok);
  Dataset ds;
  ds.x.resize(n);
  ds.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    ds.y[i] = i < static_cast<std::size_t>(cfg.n_fault) ? kLabelFault : kLabelOk;
  }
  parallel::generate_rows(cfg, ds.x);
  return ds;
}

SimConfig default_scenario() {
  SimConfig cfg;
  cfg.n_fault = 117;
  cfg.n_ok = 3363;
  //                     retainability  ho_success  rsrp     rsrq    sinr   throughput distance
  cfg.ok = {{{0.9850, 0.0040},
             {0.9650, 0.0100},
             {-85.00, 3.0000},
             {-9.000, 1.5000},
             {15.000, 4.0000},
             {25.000, 8.0000},
             {400.00, 150.00}}};
  cfg.fault = {{{0.9844, 0.0040},
                {0.9635, 0.0100},
                {-89.20, 4.5000},
                {-11.10, 2.2500},
                {9.4000, 6.0000},
                {21.500, 2.5000},
                {465.60, 46.900}}};
  cfg.clamp_lo = {0.0, 0.0, -140.0, -25.0, -10.0, 0.0, 1.0};
  cfg.clamp_hi = {1.0, 1.0, -40.0, 0.0, 40.0, 150.0, 3000.0};
  cfg.seed = 1;
  return cfg;
}

}  // namespace cellmend
