// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <thread>

#include "powerlaw/sampling.hpp"

namespace powerlaw {
namespace {

std::size_t table_entries_for(std::uint64_t n_per_sample) {
  const std::uint64_t capped = std::min<std::uint64_t>(n_per_sample, std::uint64_t{1} << 16);
  return std::max<std::size_t>(4096, static_cast<std::size_t>(capped) * 16);
}

struct PairExperiment {
  PowerLawModel model_1;
  PowerLawModel model_2;
  std::uint64_t n_per_sample;
  std::uint64_t seed;
  Estimator estimator;
  std::shared_ptr<const CdfTable> table_1;
  std::shared_ptr<const CdfTable> table_2;

  static PairExperiment make(const PowerLawModel& m1, const PowerLawModel& m2,
                             std::uint64_t n, std::uint64_t seed, Estimator estimator) {
    auto t1 = std::make_shared<const CdfTable>(m1, table_entries_for(n));
    auto t2 = (m2.alpha() == m1.alpha() && m2.x_min() == m1.x_min())
                  ? t1
                  : std::make_shared<const CdfTable>(m2, table_entries_for(n));
    return PairExperiment{m1, m2, n, seed, estimator, std::move(t1), std::move(t2)};
  }

  TestResult run(std::uint32_t k) const {
    Sampler sampler_1({model_1, SampleMethod::exact_inverse_cdf, seed},
                      2 * static_cast<std::uint64_t>(k), table_1);
    Sampler sampler_2({model_2, SampleMethod::exact_inverse_cdf, seed},
                      2 * static_cast<std::uint64_t>(k) + 1, table_2);
    const Sample s1 = sampler_1.draw(n_per_sample);
    const Sample s2 = sampler_2.draw(n_per_sample);
    return two_sample_test(s1, s2, model_1.x_min(), estimator);
  }
};

std::vector<ReplicateOutcome> run_replicates(const PairExperiment& experiment,
                                             std::uint32_t replicates, unsigned threads) {
  std::vector<ReplicateOutcome> outcomes(replicates);
  std::atomic<std::uint32_t> cursor{0};
  const auto worker = [&] {
    for (;;) {
      const std::uint32_t k = cursor.fetch_add(1);
      if (k >= replicates) return;
      ReplicateOutcome& slot = outcomes[k];
      slot.index = k;
      try {
        const TestResult result = experiment.run(k);
        slot.lambda = result.lambda;
        slot.p_value = result.p_value;
        slot.alpha_hat_1 = result.alpha_hat_1;
        slot.alpha_hat_2 = result.alpha_hat_2;
        slot.ok = true;
      } catch (const std::runtime_error& e) {
        slot.ok = false;
        slot.error = e.what();
      }
    }
  };

  unsigned worker_count = threads != 0 ? threads : std::thread::hardware_concurrency();
  worker_count = std::max(1u, std::min<unsigned>(worker_count, replicates));
  if (worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned i = 0; i < worker_count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return outcomes;
}

// Linear-interpolation empirical quantile (R type 7) of a sorted vector.
double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return std::nan("");
  if (sorted.size() == 1) return sorted.front();
  const double h = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<double> successful_lambdas_sorted(const std::vector<ReplicateOutcome>& outcomes) {
  std::vector<double> lambdas;
  lambdas.reserve(outcomes.size());
  for (const auto& outcome : outcomes) {
    if (outcome.ok) lambdas.push_back(outcome.lambda);
  }
  std::sort(lambdas.begin(), lambdas.end());
  return lambdas;
}

void validate_common(double alpha, std::uint64_t n, std::uint32_t replicates, const char* who) {
  if (!(alpha > 1.0)) throw std::invalid_argument(std::string(who) + ": alpha must exceed 1");
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n_per_sample must be >= 1");
  if (replicates < 1) throw std::invalid_argument(std::string(who) + ": replicates must be >= 1");
}

void validate(const CalibrationConfig& config) {
  validate_common(config.alpha, config.n_per_sample, config.replicates, "calibrate_null");
  if (config.levels.empty()) {
    throw std::invalid_argument("calibrate_null: need at least one level");
  }
  for (const double level : config.levels) {
    if (!(level > 0.0 && level < 1.0)) {
      throw std::invalid_argument("calibrate_null: levels must lie in (0, 1)");
    }
  }
}

void validate(const PowerConfig& config) {
  validate_common(config.alpha, config.n_per_sample, config.replicates, "power_sweep");
  if (!(config.delta >= 0.0)) {
    throw std::invalid_argument("power_sweep: delta must be nonnegative");
  }
  if (!(config.level > 0.0 && config.level < 1.0)) {
    throw std::invalid_argument("power_sweep: level must lie in (0, 1)");
  }
}

PairExperiment null_experiment(const CalibrationConfig& config) {
  const PowerLawModel model(config.alpha, config.x_min);
  return PairExperiment::make(model, model, config.n_per_sample, config.seed,
                              config.estimator);
}

PairExperiment power_experiment(const PowerConfig& config) {
  const PowerLawModel model_1(config.alpha, config.x_min);
  const PowerLawModel model_2(config.alpha + config.delta, config.x_min);
  return PairExperiment::make(model_1, model_2, config.n_per_sample, config.seed,
                              config.estimator);
}

}  // namespace

TestResult run_null_replicate(const CalibrationConfig& config, std::uint32_t k) {
  validate(config);
  return null_experiment(config).run(k);
}

TestResult run_power_replicate(const PowerConfig& config, std::uint32_t k) {
  validate(config);
  return power_experiment(config).run(k);
}

CalibrationReport calibrate_null(const CalibrationConfig& config) {
  validate(config);
  CalibrationReport report;
  report.outcomes = run_replicates(null_experiment(config), config.replicates, config.threads);

  const std::vector<double> lambdas = successful_lambdas_sorted(report.outcomes);
  report.replicates_run = static_cast<std::uint32_t>(lambdas.size());
  report.replicates_skipped = config.replicates - report.replicates_run;
  for (const double level : config.levels) {
    std::size_t rejected = 0;
    for (const auto& outcome : report.outcomes) {
      if (outcome.ok && outcome.p_value < level) ++rejected;
    }
    report.rejection_rate_per_level[level] =
        lambdas.empty() ? std::nan("") : static_cast<double>(rejected) / lambdas.size();
  }
  report.lambda_quantiles = {quantile_sorted(lambdas, 0.5), quantile_sorted(lambdas, 0.9),
                             quantile_sorted(lambdas, 0.95), quantile_sorted(lambdas, 0.99)};
  return report;
}

PowerReport power_sweep(const PowerConfig& config) {
  validate(config);
  PowerReport report;
  report.config = config;
  report.outcomes = run_replicates(power_experiment(config), config.replicates, config.threads);

  const std::vector<double> lambdas = successful_lambdas_sorted(report.outcomes);
  report.replicates_run = static_cast<std::uint32_t>(lambdas.size());
  report.replicates_skipped = config.replicates - report.replicates_run;
  std::size_t rejected = 0;
  for (const auto& outcome : report.outcomes) {
    if (outcome.ok && outcome.p_value < config.level) ++rejected;
  }
  report.rejection_rate =
      lambdas.empty() ? std::nan("") : static_cast<double>(rejected) / lambdas.size();
  report.lambda_median = quantile_sorted(lambdas, 0.5);
  return report;
}

}  // namespace powerlaw
