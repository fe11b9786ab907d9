#pragma once

#include <array>
#include <cstdint>

#include "cellmend/dataset.hpp"

// Synthetic KPI dataset generator.
//
// Each sample is a seven-KPI vector drawn from class-conditional Gaussians
// (one mean/stddev pair per KPI per class) and clamped to the KPI's physical
// range.  Faulty cells get degraded means on every KPI: lower retainability,
// handover success rate, RSRP, RSRQ, SINR and throughput, larger distance.

namespace cellmend {

struct KpiParams {
  double mean = 0.0;
  double stddev = 1.0;
};

struct SimConfig {
  int n_fault = 117;
  int n_ok = 3363;
  std::array<KpiParams, kNumFeatures> ok{};     // fault-free class
  std::array<KpiParams, kNumFeatures> fault{};  // fault class
  std::array<double, kNumFeatures> clamp_lo{};
  std::array<double, kNumFeatures> clamp_hi{};
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument on: non-positive counts, n_fault > n_ok,
// negative stddev, or an inverted clamp range.
void validate(const SimConfig& cfg);

// Deterministic for a fixed config: sample i draws from its own PRNG
// substream, so the result is identical whether rows are generated serially
// or in parallel.  Fault rows come first (labels 0...), then fault-free.
Dataset generate_dataset(const SimConfig& cfg);

// The documented default scenario: counts 117/3363 and per-KPI parameters
// chosen so the classes overlap (linear separability stays imperfect) while
// every fault-class mean is degraded.  Radio-quality KPIs (RSRP/RSRQ/SINR)
// degrade with high variance across faults; throughput and distance shift
// mildly against a broad healthy spread; retainability and handover success
// barely move.  See README for the full table.
SimConfig default_scenario();

}  // namespace cellmend
