// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "powerlaw/model.hpp"
#include "powerlaw/rng.hpp"

namespace powerlaw {

enum class SampleMethod {
  exact_inverse_cdf,         // distributionally exact, the default
  continuous_approximation,  // rounded continuous inverse transform
};

const char* to_string(SampleMethod method);

struct SamplerConfig {
  PowerLawModel model;
  SampleMethod method = SampleMethod::exact_inverse_cdf;
  std::uint64_t seed = 0;
};

// Smallest integer x >= x_min with F(x) = 1 - zeta(alpha, x+1)/zeta(alpha,
// x_min) >= u, located by exponential doubling then bisection. Pure; throws
// std::domain_error for u outside [0, 1) and std::overflow_error if the
// search leaves [x_min, 2^62] (possible only for alpha barely above 1).
std::uint64_t quantile(const PowerLawModel& model, double u);

// Immutable table of F(x) for x in [x_min, x_min + size), bit-identical to
// the values quantile() compares against, so table lookups and quantile()
// agree exactly. Shareable across samplers and threads.
class CdfTable {
 public:
  CdfTable(const PowerLawModel& model, std::size_t entries);

  // Smallest covered x with F(x) >= u, or nullopt when u lies beyond the table.
  std::optional<std::uint64_t> lookup(double u) const;
  std::size_t size() const { return cdf_.size(); }

 private:
  std::uint64_t x_min_;
  std::vector<double> cdf_;
};

// Draws whole samples; owns its generator state (single-threaded). Distinct
// (seed, stream) pairs yield independent, reproducible value streams.
class Sampler {
 public:
  explicit Sampler(const SamplerConfig& config, std::uint64_t stream = 0,
                   std::shared_ptr<const CdfTable> table = nullptr);

  Sample draw(std::size_t n);
  const SamplerConfig& config() const { return config_; }

 private:
  SamplerConfig config_;
  Xoshiro256PlusPlus rng_;
  std::shared_ptr<const CdfTable> table_;
};

// One-shot draw on stream 0 of config.seed.
Sample draw_sample(const SamplerConfig& config, std::size_t n);

}  // namespace powerlaw
