// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "powerlaw/montecarlo.hpp"
#include "powerlaw/special.hpp"

using namespace powerlaw;

namespace {

CalibrationConfig small_null_config() {
  CalibrationConfig config;
  config.alpha = 2.0;
  config.x_min = 1;
  config.n_per_sample = 500;
  config.replicates = 300;
  config.levels = {0.05, 0.2};
  config.seed = 424242;
  return config;
}

}  // namespace

TEST_CASE("calibrate_null: deterministic and independent of thread count") {
  CalibrationConfig config = small_null_config();
  config.replicates = 60;
  config.threads = 1;
  const CalibrationReport sequential = calibrate_null(config);
  config.threads = 2;
  const CalibrationReport threaded = calibrate_null(config);
  const CalibrationReport threaded_again = calibrate_null(config);

  REQUIRE(sequential.outcomes.size() == threaded.outcomes.size());
  for (std::size_t i = 0; i < sequential.outcomes.size(); ++i) {
    REQUIRE(sequential.outcomes[i].lambda == threaded.outcomes[i].lambda);
    REQUIRE(threaded.outcomes[i].lambda == threaded_again.outcomes[i].lambda);
    REQUIRE(sequential.outcomes[i].p_value == threaded.outcomes[i].p_value);
  }
  CHECK(sequential.rejection_rate_per_level == threaded.rejection_rate_per_level);
}

TEST_CASE("run_null_replicate: a replicate is reproducible in isolation") {
  CalibrationConfig config = small_null_config();
  config.replicates = 40;
  const CalibrationReport report = calibrate_null(config);
  for (const std::uint32_t k : {0u, 7u, 39u}) {
    const TestResult solo = run_null_replicate(config, k);
    CAPTURE(k);
    REQUIRE(report.outcomes[k].ok);
    CHECK(solo.lambda == report.outcomes[k].lambda);
    CHECK(solo.p_value == report.outcomes[k].p_value);
  }
}

TEST_CASE("run_power_replicate: isolated replicates match the sweep") {
  PowerConfig config;
  config.alpha = 2.0;
  config.delta = 0.3;
  config.x_min = 1;
  config.n_per_sample = 400;
  config.replicates = 20;
  config.level = 0.05;
  config.seed = 777;
  const PowerReport report = power_sweep(config);
  for (const std::uint32_t k : {0u, 11u, 19u}) {
    REQUIRE(report.outcomes[k].ok);
    const TestResult solo = run_power_replicate(config, k);
    CHECK(solo.lambda == report.outcomes[k].lambda);
  }
  // delta = 0.3 at n = 400 rejects most of the time
  CHECK(report.rejection_rate > 0.5);
}

TEST_CASE("calibrate_null: single replicate gives a Bernoulli rejection rate") {
  CalibrationConfig config = small_null_config();
  config.replicates = 1;
  config.levels = {0.05};
  const CalibrationReport report = calibrate_null(config);
  CHECK(report.replicates_run == 1);
  const double rate = report.rejection_rate_per_level.at(0.05);
  CHECK((rate == 0.0 || rate == 1.0));
}

TEST_CASE("calibrate_null: null rejection rates and quantiles track chi-squared(1)") {
  const CalibrationReport report = calibrate_null(small_null_config());
  CHECK(report.replicates_run == 300);
  CHECK(report.replicates_skipped == 0);

  // loose 5-sigma-ish bands; the tight bands run in the acceptance suite
  const double rate05 = report.rejection_rate_per_level.at(0.05);
  CHECK(rate05 >= 0.01);
  CHECK(rate05 <= 0.12);
  const double rate20 = report.rejection_rate_per_level.at(0.2);
  CHECK(rate20 >= 0.1);
  CHECK(rate20 <= 0.32);
  CHECK(rate20 > rate05);

  CHECK(report.lambda_quantiles.q50 <= report.lambda_quantiles.q90);
  CHECK(report.lambda_quantiles.q90 <= report.lambda_quantiles.q95);
  CHECK(report.lambda_quantiles.q95 <= report.lambda_quantiles.q99);
  // chi-squared(1) median is 0.4549
  CHECK(report.lambda_quantiles.q50 > 0.25);
  CHECK(report.lambda_quantiles.q50 < 0.75);
}

TEST_CASE("calibrate_null: degenerate replicates are skipped and reported, not fatal") {
  CalibrationConfig config;
  config.alpha = 3.0;  // pmf(1) ~ 0.83, so two-value samples often degenerate
  config.x_min = 1;
  config.n_per_sample = 2;
  config.replicates = 60;
  config.seed = 99;
  const CalibrationReport report = calibrate_null(config);
  CHECK(report.replicates_run + report.replicates_skipped == 60);
  CHECK(report.replicates_skipped > 0);
  CHECK(report.replicates_run > 0);
  for (const auto& outcome : report.outcomes) {
    if (!outcome.ok) {
      REQUIRE(!outcome.error.empty());
    }
  }
}

TEST_CASE("power_sweep: delta = 0 reproduces the null experiment bit for bit") {
  CalibrationConfig null_config = small_null_config();
  null_config.replicates = 50;
  null_config.levels = {0.05};
  const CalibrationReport null_report = calibrate_null(null_config);

  PowerConfig power_config;
  power_config.alpha = null_config.alpha;
  power_config.delta = 0.0;
  power_config.x_min = null_config.x_min;
  power_config.n_per_sample = null_config.n_per_sample;
  power_config.replicates = null_config.replicates;
  power_config.level = 0.05;
  power_config.seed = null_config.seed;
  const PowerReport power_report = power_sweep(power_config);

  REQUIRE(power_report.outcomes.size() == null_report.outcomes.size());
  for (std::size_t i = 0; i < power_report.outcomes.size(); ++i) {
    REQUIRE(power_report.outcomes[i].lambda == null_report.outcomes[i].lambda);
  }
  CHECK(power_report.rejection_rate == null_report.rejection_rate_per_level.at(0.05));
}

TEST_CASE("power_sweep: power is monotone in delta up to binomial noise") {
  PowerConfig config;
  config.alpha = 2.0;
  config.x_min = 1;
  config.n_per_sample = 5000;
  config.replicates = 500;
  config.level = 0.05;
  config.seed = 31337;

  double previous = -1.0;
  const double tolerance = 2.0 * std::sqrt(0.25 / config.replicates);
  for (const double delta : {0.0, 0.05, 0.1, 0.2}) {
    config.delta = delta;
    const PowerReport report = power_sweep(config);
    CAPTURE(delta);
    REQUIRE(report.replicates_skipped == 0);
    CHECK(report.rejection_rate >= previous - tolerance);
    previous = report.rejection_rate;
  }
  // delta = 0.2 at n = 5000 separates almost surely
  CHECK(previous > 0.95);
}

TEST_CASE("power_sweep: a huge gap separates perfectly") {
  PowerConfig config;
  config.alpha = 2.0;
  config.delta = 2.0;
  config.x_min = 1;
  config.n_per_sample = 1000;
  config.replicates = 100;
  config.level = 0.05;
  config.seed = 60;
  const PowerReport report = power_sweep(config);
  CHECK(report.replicates_run == 100);
  CHECK(report.rejection_rate == 1.0);
}

TEST_CASE("power_sweep: power is monotone in n up to binomial noise") {
  PowerConfig config;
  config.alpha = 2.0;
  config.delta = 0.1;
  config.x_min = 1;
  config.replicates = 200;
  config.level = 0.05;
  config.seed = 1912;

  double previous = -1.0;
  const double tolerance = 2.0 * std::sqrt(0.25 / config.replicates);
  for (const std::uint64_t n : {500ULL, 5000ULL, 50000ULL}) {
    config.n_per_sample = n;
    const PowerReport report = power_sweep(config);
    CAPTURE(n);
    CHECK(report.rejection_rate >= previous - tolerance);
    previous = report.rejection_rate;
  }
  CHECK(previous > 0.99);
}

TEST_CASE("montecarlo: config validation") {
  CalibrationConfig config = small_null_config();
  config.levels = {};
  CHECK_THROWS_AS(calibrate_null(config), std::invalid_argument);
  config = small_null_config();
  config.levels = {1.5};
  CHECK_THROWS_AS(calibrate_null(config), std::invalid_argument);
  config = small_null_config();
  config.alpha = 1.0;
  CHECK_THROWS_AS(calibrate_null(config), std::invalid_argument);
  config = small_null_config();
  config.replicates = 0;
  CHECK_THROWS_AS(calibrate_null(config), std::invalid_argument);

  PowerConfig power;
  power.alpha = 2.0;
  power.delta = -0.1;
  power.n_per_sample = 10;
  power.replicates = 2;
  CHECK_THROWS_AS(power_sweep(power), std::invalid_argument);
}
