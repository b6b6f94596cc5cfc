// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops, provided as scalar reference kernels plus an
// AVX2 variant selected once at startup. Both variants are deterministic;
// they may differ from each other by a few ulps (equivalence-tested).

namespace powerlaw::kernels {

// Continuous-inverse results at or above this bound are reported as overflow.
inline constexpr std::uint64_t kValueOverflow = ~std::uint64_t{0};

// Sum of (base + i)^(-exponent) for i in [0, count). Requires base >= 0.5
// and a finite exponent; terms are summed with compensation.
using PowSumFn = double (*)(double base, std::size_t count, double exponent);

// Sum of ln(values[i]) over count entries, compensated. Values must be >= 1.
using SumLogFn = double (*)(const std::uint64_t* values, std::size_t count);

// out[i] = max(x_min, floor((x_min - 1/2) * (1 - u[i])^(-1/(alpha - 1)) + 1/2)),
// the rounded continuous inverse transform of the power law. u[i] in [0, 1);
// results that reach 2^63 are stored as kValueOverflow.
using ContinuousInverseFn = void (*)(const double* u, std::size_t count, double alpha,
                                     std::uint64_t x_min, std::uint64_t* out);

struct Kernels {
  const char* name;
  PowSumFn pow_sum;
  SumLogFn sum_log;
  ContinuousInverseFn continuous_inverse;
};

const Kernels& scalar_kernels();

// nullptr when the build target or the running CPU lacks AVX2+FMA.
const Kernels* avx2_kernels();

// Kernels used by the library, resolved once per process.
const Kernels& active_kernels();

}  // namespace powerlaw::kernels
