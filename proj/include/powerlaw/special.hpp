// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace powerlaw {

// Exponent range supported by hurwitz_zeta and PowerLawModel. Below 1 the
// series diverges; 50 is far beyond any realistic scaling parameter.
inline constexpr double kMinAlpha = 1.0;  // exclusive
inline constexpr double kMaxAlpha = 50.0;

// Numerical policy for hurwitz_zeta: N leading terms summed directly, the
// rest handled by an Euler-Maclaurin tail expansion.
struct ZetaAccuracy {
  double target_relative_error = 1e-12;
  int direct_sum_terms = 64;  // N, at least 10
  // Bernoulli correction terms; the asymptotic series diverges past ~15.
  int euler_maclaurin_correction_terms = 8;
};

// Hurwitz zeta: sum over n >= 0 of (n + q)^(-s), for s in (1, 50], q >= 0.5.
// Relative error stays below acc.target_relative_error (defaults reach ~1e-13
// over the whole supported range). Throws std::domain_error outside the
// (s, q) domain and std::invalid_argument for a bad accuracy policy.
double hurwitz_zeta(double s, double q, const ZetaAccuracy& acc = {});

// Complementary error function with erfc(-x) = 2 - erfc(x) enforced exactly;
// absolute error <= 1e-12 on [0, 30].
double erfc(double x);

// Survival function of the chi-squared distribution with 1 degree of freedom,
// Pr(X > lambda) = erfc(sqrt(lambda / 2)). Throws std::domain_error for
// negative lambda.
double chi2_sf_1df(double lambda);

}  // namespace powerlaw
