// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw/estimate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "powerlaw/errors.hpp"
#include "powerlaw/special.hpp"

namespace powerlaw {
namespace {

constexpr double kAlphaLowerBracket = 1.0 + 1e-6;
constexpr double kBrentTolerance = 1e-9;

// Brent's derivative-free minimizer on [a, b] for a unimodal f.
template <typename F>
double brent_minimize(F f, double a, double b, double tol_abs, int max_iter = 200) {
  constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt(5)) / 2
  double x = a + kGolden * (b - a);
  double w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  for (int iter = 0; iter < max_iter; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol = tol_abs + 4e-12 * std::abs(x);
    if (std::abs(x - m) <= 2.0 * tol - 0.5 * (b - a)) break;

    bool parabolic = false;
    if (std::abs(e) > tol) {
      // trial parabola through (v, fv), (w, fw), (x, fx)
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p; else q = -q;
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u_trial = x + d;
        if (u_trial - a < 2.0 * tol || b - u_trial < 2.0 * tol) d = (x < m) ? tol : -tol;
        parabolic = true;
      }
    }
    if (!parabolic) {
      e = (x < m) ? b - x : a - x;
      d = kGolden * e;
    }

    const double u = (std::abs(d) >= tol) ? x + d : x + ((d > 0.0) ? tol : -tol);
    const double fu = f(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return x;
}

void check_support(const Sample& sample, std::uint64_t x_min, const char* who) {
  if (x_min < 1) {
    throw std::invalid_argument(std::string(who) + ": x_min must be a positive integer");
  }
  if (sample.min_value() < x_min) {
    throw std::domain_error(std::string(who) + ": sample contains values below x_min = " +
                            std::to_string(x_min));
  }
}

FitResult make_result(double alpha_hat, Estimator method, const Sample& sample,
                      std::uint64_t x_min) {
  const PowerLawModel model(alpha_hat, x_min);
  return FitResult{alpha_hat, method, sample.size(), x_min, log_likelihood(model, sample)};
}

}  // namespace

const char* to_string(Estimator estimator) {
  return estimator == Estimator::approx ? "approx" : "exact";
}

FitResult mle_approx(const Sample& sample, std::uint64_t x_min) {
  check_support(sample, x_min, "mle_approx");
  const double n = static_cast<double>(sample.size());
  // sum ln(x_i / (x_min - 1/2)) = sum_log - n ln(x_min - 1/2), always > 0
  const double denom = sample.sum_log() - n * std::log(static_cast<double>(x_min) - 0.5);
  const double alpha_hat = 1.0 + n / denom;
  if (!(alpha_hat <= kMaxAlpha)) {
    throw BoundaryError("mle_approx: estimate " + std::to_string(alpha_hat) +
                        " exceeds the supported range (1, 50]");
  }
  return make_result(alpha_hat, Estimator::approx, sample, x_min);
}

FitResult mle_exact(const Sample& sample, std::uint64_t x_min) {
  check_support(sample, x_min, "mle_exact");
  if (sample.max_value() == x_min) {
    throw UnboundedLikelihoodError(
        "mle_exact: every value equals x_min; the likelihood increases without bound");
  }

  const double n = static_cast<double>(sample.size());
  const double sum_log = sample.sum_log();
  const double q = static_cast<double>(x_min);
  const auto neg_log_likelihood = [&](double alpha) {
    return n * std::log(hurwitz_zeta(alpha, q)) + alpha * sum_log;
  };

  const double alpha_hat =
      brent_minimize(neg_log_likelihood, kAlphaLowerBracket, kMaxAlpha, kBrentTolerance);
  if (kMaxAlpha - alpha_hat <= 1e-6) {
    throw BoundaryError("mle_exact: maximizer pinned at alpha = 50");
  }
  return make_result(alpha_hat, Estimator::exact, sample, x_min);
}

FitResult fit(const Sample& sample, std::uint64_t x_min, Estimator estimator) {
  return estimator == Estimator::approx ? mle_approx(sample, x_min)
                                        : mle_exact(sample, x_min);
}

}  // namespace powerlaw
