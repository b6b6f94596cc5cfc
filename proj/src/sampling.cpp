// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "powerlaw/kernels.hpp"
#include "powerlaw/special.hpp"

namespace powerlaw {
namespace {

constexpr std::uint64_t kSearchLimit = std::uint64_t{1} << 62;
constexpr std::size_t kDefaultTableEntries = 4096;

// F(x) = Pr(X <= x). Both quantile() and CdfTable go through this helper with
// the same zeta_min, which is what makes their comparisons bit-identical.
double cdf_value(const PowerLawModel& model, std::uint64_t x, double zeta_min) {
  return 1.0 - hurwitz_zeta(model.alpha(), static_cast<double>(x) + 1.0) / zeta_min;
}

}  // namespace

const char* to_string(SampleMethod method) {
  return method == SampleMethod::exact_inverse_cdf ? "exact" : "approx";
}

std::uint64_t quantile(const PowerLawModel& model, double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::domain_error("quantile: u must lie in [0, 1), got " + std::to_string(u));
  }
  const double zeta_min = hurwitz_zeta(model.alpha(), static_cast<double>(model.x_min()));

  std::uint64_t below = model.x_min();  // once past the first probe: F(below) < u
  if (cdf_value(model, below, zeta_min) >= u) return below;

  std::uint64_t probe;
  std::uint64_t step = 1;
  for (;;) {
    probe = below + step;
    if (probe > kSearchLimit) {
      throw std::overflow_error("quantile: search passed 2^62 (alpha too close to 1)");
    }
    if (cdf_value(model, probe, zeta_min) >= u) break;
    below = probe;
    step <<= 1;
  }
  // invariant: F(below) < u <= F(probe)
  while (probe - below > 1) {
    const std::uint64_t mid = below + (probe - below) / 2;
    if (cdf_value(model, mid, zeta_min) >= u) {
      probe = mid;
    } else {
      below = mid;
    }
  }
  return probe;
}

CdfTable::CdfTable(const PowerLawModel& model, std::size_t entries) : x_min_(model.x_min()) {
  const double zeta_min = hurwitz_zeta(model.alpha(), static_cast<double>(model.x_min()));
  cdf_.reserve(entries);
  for (std::size_t i = 0; i < entries; ++i) {
    const double f = cdf_value(model, x_min_ + i, zeta_min);
    // Keep only the strictly increasing prefix. Zeta rounding can flatten
    // adjacent F values once pmf(x) drops near 1e-15 * ccdf(x) (alpha within
    // ~1e-12 of 1); past that point lookups fall back to quantile().
    if (!cdf_.empty() && f <= cdf_.back()) break;
    cdf_.push_back(f);
  }
}

std::optional<std::uint64_t> CdfTable::lookup(double u) const {
  if (cdf_.empty() || u > cdf_.back()) return std::nullopt;
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  return x_min_ + static_cast<std::uint64_t>(it - cdf_.begin());
}

Sampler::Sampler(const SamplerConfig& config, std::uint64_t stream,
                 std::shared_ptr<const CdfTable> table)
    : config_(config), rng_(config.seed, stream), table_(std::move(table)) {
  if (config_.method == SampleMethod::exact_inverse_cdf && !table_) {
    table_ = std::make_shared<const CdfTable>(config_.model, kDefaultTableEntries);
  }
}

Sample Sampler::draw(std::size_t n) {
  if (n < 1) throw std::invalid_argument("Sampler::draw: n must be at least 1");
  std::vector<std::uint64_t> values(n);

  if (config_.method == SampleMethod::exact_inverse_cdf) {
    for (std::size_t i = 0; i < n; ++i) {
      const double u = rng_.next_unit();
      const auto hit = table_->lookup(u);
      values[i] = hit ? *hit : quantile(config_.model, u);
    }
  } else {
    std::vector<double> uniforms(n);
    for (auto& u : uniforms) u = rng_.next_unit();
    kernels::active_kernels().continuous_inverse(uniforms.data(), n, config_.model.alpha(),
                                                 config_.model.x_min(), values.data());
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i] == kernels::kValueOverflow) {
        throw std::overflow_error(
            "draw: continuous-approximation variate exceeded 2^63 (alpha too close to 1)");
      }
    }
  }
  return Sample(std::move(values));
}

Sample draw_sample(const SamplerConfig& config, std::size_t n) {
  return Sampler(config).draw(n);
}

}  // namespace powerlaw
