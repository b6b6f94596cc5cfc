// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "powerlaw/estimate.hpp"
#include "powerlaw/model.hpp"

namespace powerlaw {

struct TestResult {
  double lambda;        // log-likelihood-ratio statistic
  int df;               // always 1: two alternative parameters vs one pooled
  double p_value;       // chi2_sf_1df(max(lambda, 0))
  double alpha_hat_1;
  double alpha_hat_2;
  double alpha_hat_pooled;
  std::uint64_t n1;
  std::uint64_t n2;
  std::uint64_t x_min;
  Estimator estimator;
  // Only the approximate estimator may report lambda < 0 (it is not a
  // likelihood maximizer); the value is then left unclamped and flagged here.
  bool negative_lambda_warning;
};

// -2 l_null + 2 (l_alt_1 + l_alt_2); exposed for direct testing.
double lambda_statistic(double l_null, double l_alt_1, double l_alt_2);

// Two-sample test of "same power law": fits alpha on each sample and on the
// pooled multiset at the shared x_min, forms the ratio statistic and its
// chi-squared(1) p-value. With the exact estimator, lambda in (-1e-9, 0) is
// clamped to 0 and anything more negative raises InternalConsistencyError.
TestResult two_sample_test(const Sample& s1, const Sample& s2, std::uint64_t x_min,
                           Estimator estimator = Estimator::exact);

}  // namespace powerlaw
