// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "powerlaw/kernels.hpp"

namespace powerlaw {
namespace {

// B_{2k} / (2k)! for k = 1..15.
constexpr double kBernoulliOverFactorial[] = {
    8.3333333333333333e-02,  -1.3888888888888889e-03, 3.3068783068783069e-05,
    -8.2671957671957672e-07, 2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13, 8.5860620562778446e-15,
    -2.1748686985580619e-16, 5.5090028283602295e-18,  -1.3954464685812523e-19,
    3.5347070396294675e-21,  -8.9535174270375469e-23, 2.2679524523376831e-24,
};

void validate_policy(const ZetaAccuracy& acc) {
  if (!(acc.target_relative_error > 0.0)) {
    throw std::invalid_argument("ZetaAccuracy: target_relative_error must be positive");
  }
  if (acc.direct_sum_terms < 10) {
    throw std::invalid_argument("ZetaAccuracy: direct_sum_terms must be at least 10");
  }
  if (acc.euler_maclaurin_correction_terms < 2 || acc.euler_maclaurin_correction_terms > 15) {
    throw std::invalid_argument(
        "ZetaAccuracy: euler_maclaurin_correction_terms must lie in [2, 15]");
  }
}

}  // namespace

double hurwitz_zeta(double s, double q, const ZetaAccuracy& acc) {
  validate_policy(acc);
  if (!(s > kMinAlpha) || !(s <= kMaxAlpha)) {
    throw std::domain_error("hurwitz_zeta: exponent must lie in (1, 50], got " +
                            std::to_string(s));
  }
  if (!(q >= 0.5)) {
    throw std::domain_error("hurwitz_zeta: offset must be >= 0.5, got " + std::to_string(q));
  }

  const std::size_t n_direct = static_cast<std::size_t>(acc.direct_sum_terms);
  const double direct = kernels::active_kernels().pow_sum(q, n_direct, s);

  // Euler-Maclaurin tail from w = q + N: integral term, half-sample term,
  // then Bernoulli corrections c_k * s(s+1)...(s+2k-2) * w^(-s-2k+1).
  const double w = q + static_cast<double>(n_direct);
  const double integral = std::pow(w, 1.0 - s) / (s - 1.0);
  double tail = integral + 0.5 * std::pow(w, -s);

  const double w_step = 1.0 / (w * w);
  double pochhammer = s;                    // s(s+1)...(s+2k-2) at k = 1
  double w_power = std::pow(w, -s - 1.0);   // w^(-s-2k+1) at k = 1
  for (int k = 1; k <= acc.euler_maclaurin_correction_terms; ++k) {
    const double term = kBernoulliOverFactorial[k - 1] * pochhammer * w_power;
    tail += term;
    if (std::abs(term) < 0.01 * acc.target_relative_error * (direct + tail)) break;
    pochhammer *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    w_power *= w_step;
  }
  return direct + tail;
}

double erfc(double x) {
  if (x < 0.0) return 2.0 - std::erfc(-x);
  return std::erfc(x);
}

double chi2_sf_1df(double lambda) {
  if (!(lambda >= 0.0)) {
    throw std::domain_error("chi2_sf_1df: statistic must be nonnegative, got " +
                            std::to_string(lambda));
  }
  return erfc(std::sqrt(0.5 * lambda));
}

}  // namespace powerlaw
