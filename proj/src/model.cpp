// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "powerlaw/kernels.hpp"
#include "powerlaw/special.hpp"

namespace powerlaw {

PowerLawModel::PowerLawModel(double alpha, std::uint64_t x_min)
    : alpha_(alpha), x_min_(x_min) {
  if (!(alpha > kMinAlpha) || !(alpha <= kMaxAlpha)) {
    throw std::invalid_argument("PowerLawModel: alpha must lie in (1, 50], got " +
                                std::to_string(alpha));
  }
  if (x_min < 1) {
    throw std::invalid_argument("PowerLawModel: x_min must be a positive integer");
  }
}

Sample::Sample(std::vector<std::uint64_t> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("Sample: need at least one value");
  }
  std::sort(values_.begin(), values_.end());
  if (values_.front() < 1) {
    throw std::invalid_argument("Sample: values must be positive integers");
  }
  sum_log_ = kernels::active_kernels().sum_log(values_.data(), values_.size());
}

double pmf(const PowerLawModel& model, std::uint64_t x) {
  if (x < model.x_min()) {
    throw std::domain_error("pmf: x = " + std::to_string(x) + " is below x_min = " +
                            std::to_string(model.x_min()));
  }
  const double z = hurwitz_zeta(model.alpha(), static_cast<double>(model.x_min()));
  return std::pow(static_cast<double>(x), -model.alpha()) / z;
}

double ccdf(const PowerLawModel& model, std::uint64_t x) {
  if (x < model.x_min()) {
    throw std::domain_error("ccdf: x = " + std::to_string(x) + " is below x_min = " +
                            std::to_string(model.x_min()));
  }
  const double z_min = hurwitz_zeta(model.alpha(), static_cast<double>(model.x_min()));
  return hurwitz_zeta(model.alpha(), static_cast<double>(x)) / z_min;
}

double log_likelihood(const PowerLawModel& model, const Sample& sample) {
  if (sample.min_value() < model.x_min()) {
    throw std::domain_error("log_likelihood: sample contains values below x_min = " +
                            std::to_string(model.x_min()));
  }
  const double z = hurwitz_zeta(model.alpha(), static_cast<double>(model.x_min()));
  return -static_cast<double>(sample.size()) * std::log(z) -
         model.alpha() * sample.sum_log();
}

std::vector<CcdfPoint> empirical_ccdf(const Sample& sample) {
  const auto values = sample.values();
  const double n = static_cast<double>(values.size());
  std::vector<CcdfPoint> points;
  for (std::size_t i = 0; i < values.size();) {
    const std::uint64_t x = values[i];
    // all entries >= values[i] sit at indices i..n-1 in the sorted vector
    points.push_back({x, static_cast<double>(values.size() - i) / n});
    while (i < values.size() && values[i] == x) ++i;
  }
  return points;
}

}  // namespace powerlaw
