// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "powerlaw/kernels.hpp"

namespace powerlaw::kernels {
namespace {

// Kahan-compensated accumulator; keeps long reductions below 1 ulp drift.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double term) {
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double pow_sum_scalar(double base, std::size_t count, double exponent) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < count; ++i) {
    acc.add(std::pow(base + static_cast<double>(i), -exponent));
  }
  return acc.sum;
}

double sum_log_scalar(const std::uint64_t* values, std::size_t count) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < count; ++i) {
    acc.add(std::log(static_cast<double>(values[i])));
  }
  return acc.sum;
}

void continuous_inverse_scalar(const double* u, std::size_t count, double alpha,
                               std::uint64_t x_min, std::uint64_t* out) {
  const double scale = static_cast<double>(x_min) - 0.5;
  const double inv_exponent = -1.0 / (alpha - 1.0);
  const double floor_value = static_cast<double>(x_min);
  for (std::size_t i = 0; i < count; ++i) {
    const double v = std::floor(scale * std::pow(1.0 - u[i], inv_exponent) + 0.5);
    if (v >= 0x1p63) {
      out[i] = kValueOverflow;
    } else if (v <= floor_value) {
      out[i] = x_min;
    } else {
      out[i] = static_cast<std::uint64_t>(v);
    }
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table{"scalar", &pow_sum_scalar, &sum_log_scalar,
                             &continuous_inverse_scalar};
  return table;
}

}  // namespace powerlaw::kernels
