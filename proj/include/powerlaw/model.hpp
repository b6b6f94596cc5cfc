// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace powerlaw {

// Discrete power law p(x) = x^(-alpha) / zeta(alpha, x_min) on integers
// x >= x_min. Immutable after construction.
class PowerLawModel {
 public:
  PowerLawModel(double alpha, std::uint64_t x_min);

  double alpha() const { return alpha_; }
  std::uint64_t x_min() const { return x_min_; }

 private:
  double alpha_;
  std::uint64_t x_min_;
};

// Validated multiset of positive integers, stored sorted, with the sufficient
// statistics n and sum of ln(x_i) cached at construction.
class Sample {
 public:
  explicit Sample(std::vector<std::uint64_t> values);

  std::size_t size() const { return values_.size(); }
  double sum_log() const { return sum_log_; }
  std::span<const std::uint64_t> values() const { return values_; }  // ascending
  std::uint64_t min_value() const { return values_.front(); }
  std::uint64_t max_value() const { return values_.back(); }

 private:
  std::vector<std::uint64_t> values_;
  double sum_log_;
};

struct CcdfPoint {
  std::uint64_t x;
  double proportion;  // share of sample values >= x, in (0, 1]
};

// x^(-alpha) / zeta(alpha, x_min) for x >= x_min.
double pmf(const PowerLawModel& model, std::uint64_t x);

// Inclusive upper tail Pr(X >= x) = zeta(alpha, x) / zeta(alpha, x_min);
// equals 1 at x = x_min and telescopes against pmf.
double ccdf(const PowerLawModel& model, std::uint64_t x);

// Discrete log-likelihood -n ln zeta(alpha, x_min) - alpha * sum ln x_i.
double log_likelihood(const PowerLawModel& model, const Sample& sample);

// One point per distinct sample value, x ascending, proportion = (#values >= x)/n.
std::vector<CcdfPoint> empirical_ccdf(const Sample& sample);

}  // namespace powerlaw
