// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw/lrt.hpp"

#include <string>
#include <vector>

#include "powerlaw/errors.hpp"
#include "powerlaw/special.hpp"

namespace powerlaw {
namespace {

constexpr double kClampWindow = -1e-9;

}  // namespace

double lambda_statistic(double l_null, double l_alt_1, double l_alt_2) {
  return -2.0 * l_null + 2.0 * (l_alt_1 + l_alt_2);
}

TestResult two_sample_test(const Sample& s1, const Sample& s2, std::uint64_t x_min,
                           Estimator estimator) {
  // Multiset union, duplicates kept; Sample sorts, so the pooled fit is
  // independent of argument order.
  std::vector<std::uint64_t> pooled_values;
  pooled_values.reserve(s1.size() + s2.size());
  pooled_values.insert(pooled_values.end(), s1.values().begin(), s1.values().end());
  pooled_values.insert(pooled_values.end(), s2.values().begin(), s2.values().end());
  const Sample pooled(std::move(pooled_values));

  const FitResult fit1 = fit(s1, x_min, estimator);
  const FitResult fit2 = fit(s2, x_min, estimator);
  const FitResult fit_pooled = fit(pooled, x_min, estimator);

  double lambda = lambda_statistic(fit_pooled.log_likelihood_at_fit,
                                   fit1.log_likelihood_at_fit,
                                   fit2.log_likelihood_at_fit);
  bool warning = false;
  if (lambda < 0.0) {
    if (estimator == Estimator::exact) {
      if (lambda > kClampWindow) {
        lambda = 0.0;
      } else {
        throw InternalConsistencyError(
            "two_sample_test: exact-estimator lambda = " + std::to_string(lambda) +
            " is below the -1e-9 clamp window");
      }
    } else {
      warning = true;  // approx estimator: report unclamped
    }
  }

  const double p_value = chi2_sf_1df(lambda < 0.0 ? 0.0 : lambda);
  return TestResult{lambda,
                    1,
                    p_value,
                    fit1.alpha_hat,
                    fit2.alpha_hat,
                    fit_pooled.alpha_hat,
                    s1.size(),
                    s2.size(),
                    x_min,
                    estimator,
                    warning};
}

}  // namespace powerlaw
