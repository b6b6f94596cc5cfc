// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force oracles used only by tests. None of these share a
// code path with the library implementations they check.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace powerlaw::test {

// Rigorous bracket of zeta(s, q) from direct summation of `terms` leading
// terms plus the integral tail bound: for a decreasing positive f,
//   sum_{n >= K} f(n) lies in [I, I + f(K)] with I = integral_K^inf f.
struct ZetaBracket {
  double lower;
  double upper;
  double midpoint() const { return 0.5 * (lower + upper); }
  double half_width() const { return 0.5 * (upper - lower); }
};

inline ZetaBracket zeta_bruteforce(double s, double q, std::size_t terms = 1000000) {
  double sum = 0.0, carry = 0.0;  // Kahan
  for (std::size_t n = 0; n < terms; ++n) {
    const double y = std::pow(q + static_cast<double>(n), -s) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  const double w = q + static_cast<double>(terms);
  const double integral = std::pow(w, 1.0 - s) / (s - 1.0);
  return {sum + integral, sum + integral + std::pow(w, -s)};
}

// erfc by its alternating Maclaurin series; fine to ~1e-15 absolute for
// |x| <= 2, which covers the oracle points used in tests.
inline double erfc_series(double x) {
  const double two_over_sqrt_pi = 1.1283791670955126;
  double term = x;  // x^(2n+1) * (-1)^n / n! at n = 0
  double sum = 0.0;
  for (int n = 0; n < 60; ++n) {
    sum += term / (2.0 * n + 1.0);
    term *= -x * x / (n + 1.0);
    if (std::abs(term) < 1e-20) break;
  }
  return 1.0 - two_over_sqrt_pi * sum;
}

// Inverse of a strictly decreasing survival function by bisection:
// returns lambda with sf(lambda) = 1 - p (the p-quantile of the CDF).
inline double invert_survival(const std::function<double(double)>& sf, double p,
                              double lo = 0.0, double hi = 200.0) {
  const double target = 1.0 - p;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (sf(mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Grid-search MLE for small samples: maximizes the discrete log-likelihood
// over alpha in (1.001, 10] through staged grids equivalent to a 1e-5 step
// plus local refinement, with an independent zeta evaluation.
inline double grid_search_mle(const std::vector<std::uint64_t>& values, std::uint64_t x_min) {
  double sum_log = 0.0;
  for (const auto v : values) sum_log += std::log(static_cast<double>(v));
  const double n = static_cast<double>(values.size());

  const auto log_likelihood = [&](double alpha) {
    const ZetaBracket z = zeta_bruteforce(alpha, static_cast<double>(x_min), 100000);
    return -n * std::log(z.midpoint()) - alpha * sum_log;
  };

  double best = 1.001, best_value = log_likelihood(best);
  double lo = 1.001, hi = 10.0;
  for (const double step : {1e-2, 1e-4, 1e-6, 1e-8}) {
    for (double a = lo; a <= hi; a += step) {
      const double value = log_likelihood(a);
      if (value > best_value) {
        best_value = value;
        best = a;
      }
    }
    lo = std::max(1.001, best - 2.0 * step);
    hi = std::min(10.0, best + 2.0 * step);
  }
  return best;
}

}  // namespace powerlaw::test
