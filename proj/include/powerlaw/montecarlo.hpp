// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "powerlaw/estimate.hpp"
#include "powerlaw/lrt.hpp"

namespace powerlaw {

// Null-calibration experiment: replicate pairs drawn from one power law.
struct CalibrationConfig {
  double alpha;
  std::uint64_t x_min = 1;
  std::uint64_t n_per_sample;
  std::uint32_t replicates;
  std::vector<double> levels = {0.05};
  std::uint64_t seed = 0;
  Estimator estimator = Estimator::exact;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Power experiment: first sample from alpha, second from alpha + delta.
struct PowerConfig {
  double alpha;
  double delta = 0.0;
  std::uint64_t x_min = 1;
  std::uint64_t n_per_sample;
  std::uint32_t replicates;
  double level = 0.05;
  std::uint64_t seed = 0;
  Estimator estimator = Estimator::exact;
  unsigned threads = 0;
};

struct ReplicateOutcome {
  std::uint32_t index = 0;
  double lambda = 0.0;
  double p_value = 0.0;
  double alpha_hat_1 = 0.0;
  double alpha_hat_2 = 0.0;
  bool ok = false;
  std::string error;  // empty when ok; estimation failures are recorded, not fatal
};

struct LambdaQuantiles {
  double q50;
  double q90;
  double q95;
  double q99;
};

struct CalibrationReport {
  std::map<double, double> rejection_rate_per_level;  // fraction of runs with p < level
  LambdaQuantiles lambda_quantiles;                   // empirical, successful replicates
  std::uint32_t replicates_run;                       // successful replicates
  std::uint32_t replicates_skipped;
  std::vector<ReplicateOutcome> outcomes;             // replicate order
};

struct PowerReport {
  double rejection_rate;  // fraction of runs with p < config.level
  double lambda_median;
  PowerConfig config;
  std::uint32_t replicates_run;
  std::uint32_t replicates_skipped;
  std::vector<ReplicateOutcome> outcomes;
};

// Replicate k in isolation: streams 2k and 2k+1 of the master seed, so a
// single replicate is reproducible without running the others.
TestResult run_null_replicate(const CalibrationConfig& config, std::uint32_t k);
TestResult run_power_replicate(const PowerConfig& config, std::uint32_t k);

// Replicated experiments; deterministic given the config (including seed),
// independent of thread count. Per-replicate estimation failures are counted
// and reported rather than aborting the run.
CalibrationReport calibrate_null(const CalibrationConfig& config);
PowerReport power_sweep(const PowerConfig& config);

}  // namespace powerlaw
