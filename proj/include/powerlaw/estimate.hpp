// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "powerlaw/model.hpp"

namespace powerlaw {

enum class Estimator { approx, exact };

const char* to_string(Estimator estimator);

struct FitResult {
  double alpha_hat;
  Estimator method;
  std::uint64_t n;
  std::uint64_t x_min;
  double log_likelihood_at_fit;
};

// Closed-form continuous-approximation estimate
//   alpha_hat = 1 + n / sum ln(x_i / (x_min - 1/2)).
// Throws std::domain_error on support violations and BoundaryError if the
// formula lands outside (1, 50].
FitResult mle_approx(const Sample& sample, std::uint64_t x_min);

// Exact discrete MLE: maximizes l(alpha) = -n ln zeta(alpha, x_min) - alpha
// sum ln x_i over (1, 50] by bracketed parabolic/golden-section search
// (l is concave). Throws UnboundedLikelihoodError when every value equals
// x_min and BoundaryError when the maximizer pins at alpha = 50.
FitResult mle_exact(const Sample& sample, std::uint64_t x_min);

FitResult fit(const Sample& sample, std::uint64_t x_min, Estimator estimator);

}  // namespace powerlaw
