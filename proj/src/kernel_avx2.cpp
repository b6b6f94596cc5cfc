// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0
//
// AVX2+FMA kernels. This translation unit is compiled with -mavx2 -mfma and
// is only entered after a runtime CPU check (see kernel_dispatch.cpp).
//
// x^y is evaluated as exp2(y * log2(x)) with log2 carried in double-double,
// so the exponent product keeps ~2^-104 relative error before the final
// exp2 rounding. Inputs must be positive normal doubles; the power-law
// kernels only ever see base >= 2^-53.

#include "powerlaw/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace powerlaw::kernels {
namespace {

struct Vec2d {
  __m256d hi;
  __m256d lo;
};

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// s = a + b exactly, as (s, err). No magnitude ordering assumed.
inline Vec2d two_sum(__m256d a, __m256d b) {
  const __m256d s = _mm256_add_pd(a, b);
  const __m256d bb = _mm256_sub_pd(s, a);
  const __m256d err = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, bb)),
                                    _mm256_sub_pd(b, bb));
  return {s, err};
}

// p = a * b exactly, as (p, err). Needs FMA.
inline Vec2d two_prod(__m256d a, __m256d b) {
  const __m256d p = _mm256_mul_pd(a, b);
  const __m256d err = _mm256_fmsub_pd(a, b, p);
  return {p, err};
}

// Integer-valued doubles in [-2^51, 2^51] <-> int64, via the 1.5*2^52 anchor.
const __m256i kMagicBits = _mm256_set1_epi64x(0x4338000000000000LL);
inline __m256i f64_to_i64_small(__m256d v) {
  const __m256d shifted = _mm256_add_pd(v, splat(6755399441055744.0));
  return _mm256_sub_epi64(_mm256_castpd_si256(shifted), kMagicBits);
}
inline __m256d i64_to_f64_small(__m256i v) {
  const __m256d anchored = _mm256_castsi256_pd(_mm256_add_epi64(v, kMagicBits));
  return _mm256_sub_pd(anchored, splat(6755399441055744.0));
}

// Full-range uint64 -> double (exact below 2^53, which covers sample values).
inline __m256d u64_to_f64(__m256i v) {
  const __m256i lo32 = _mm256_blend_epi32(
      v, _mm256_castpd_si256(splat(0x1p52)), 0b10101010);
  const __m256i hi32 = _mm256_or_si256(
      _mm256_srli_epi64(v, 32), _mm256_castpd_si256(splat(0x1p84)));
  const __m256d hi = _mm256_sub_pd(_mm256_castsi256_pd(hi32),
                                   splat(0x1p84 + 0x1p52));
  return _mm256_add_pd(hi, _mm256_castsi256_pd(lo32));
}

// log2(x) in double-double for positive normal x.
inline Vec2d log2_dd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  __m256i exp_i = _mm256_sub_epi64(_mm256_srli_epi64(bits, 52),
                                   _mm256_set1_epi64x(1023));
  const __m256i mant_bits = _mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FF0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant_bits);  // [1, 2)

  // Re-center m into [sqrt2/2, sqrt2) so |log2 m| <= 1/2.
  const __m256d ge = _mm256_cmp_pd(m, splat(1.4142135623730951), _CMP_GE_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, splat(0.5)), ge);
  exp_i = _mm256_sub_epi64(exp_i, _mm256_castpd_si256(ge));  // mask lanes are -1
  const __m256d e = i64_to_f64_small(exp_i);

  // u = (m - 1) / (m + 1) in double-double; m - 1 is exact.
  const __m256d a = _mm256_sub_pd(m, splat(1.0));
  const Vec2d b = two_sum(m, splat(1.0));
  const __m256d u_hi = _mm256_div_pd(a, b.hi);
  __m256d rem = _mm256_fnmadd_pd(u_hi, b.hi, a);
  rem = _mm256_fnmadd_pd(u_hi, b.lo, rem);
  const __m256d u_lo = _mm256_div_pd(rem, b.hi);

  // atanh(u) = u + u^3 * P(u^2); |u| <= 0.1716 so plain doubles suffice
  // for the correction term.
  const __m256d t = _mm256_mul_pd(u_hi, u_hi);
  __m256d p = splat(0.043478260869565216);  // 1/23
  p = _mm256_fmadd_pd(p, t, splat(0.047619047619047616));
  p = _mm256_fmadd_pd(p, t, splat(0.05263157894736842));
  p = _mm256_fmadd_pd(p, t, splat(0.058823529411764705));
  p = _mm256_fmadd_pd(p, t, splat(0.06666666666666667));
  p = _mm256_fmadd_pd(p, t, splat(0.07692307692307693));
  p = _mm256_fmadd_pd(p, t, splat(0.09090909090909091));
  p = _mm256_fmadd_pd(p, t, splat(0.1111111111111111));
  p = _mm256_fmadd_pd(p, t, splat(0.14285714285714285));
  p = _mm256_fmadd_pd(p, t, splat(0.2));
  p = _mm256_fmadd_pd(p, t, splat(0.3333333333333333));
  const __m256d corr = _mm256_mul_pd(_mm256_mul_pd(u_hi, t), p);

  Vec2d s = two_sum(u_hi, corr);
  s.lo = _mm256_add_pd(s.lo, u_lo);

  // log2(m) = (2/ln2) * atanh(u)
  const Vec2d prod = two_prod(s.hi, splat(2.8853900817779268));
  const __m256d prod_lo = _mm256_add_pd(
      prod.lo, _mm256_fmadd_pd(s.hi, splat(4.0710547481862066e-17),
                               _mm256_mul_pd(s.lo, splat(2.8853900817779268))));

  Vec2d r = two_sum(e, prod.hi);
  r.lo = _mm256_add_pd(r.lo, prod_lo);
  return r;
}

// 2^k for integer-valued k in [-650, 650].
inline __m256d exp2_int(__m256d k) {
  const __m256i ki = f64_to_i64_small(k);
  return _mm256_castsi256_pd(
      _mm256_slli_epi64(_mm256_add_epi64(ki, _mm256_set1_epi64x(1023)), 52));
}

// exp2 of a double-double argument; overflow -> inf, underflow -> 0.
inline __m256d exp2_dd(__m256d t_hi, __m256d t_lo) {
  const __m256d k = _mm256_round_pd(t_hi, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d r = _mm256_add_pd(_mm256_sub_pd(t_hi, k), t_lo);  // |r| <= 0.5

  __m256d p = splat(6.778726354822545e-14);
  p = _mm256_fmadd_pd(p, r, splat(1.3691488853904128e-12));
  p = _mm256_fmadd_pd(p, r, splat(2.5678435993488206e-11));
  p = _mm256_fmadd_pd(p, r, splat(4.4455382718708116e-10));
  p = _mm256_fmadd_pd(p, r, splat(7.054911620801123e-09));
  p = _mm256_fmadd_pd(p, r, splat(1.01780860092397e-07));
  p = _mm256_fmadd_pd(p, r, splat(1.321548679014431e-06));
  p = _mm256_fmadd_pd(p, r, splat(1.5252733804059841e-05));
  p = _mm256_fmadd_pd(p, r, splat(0.0001540353039338161));
  p = _mm256_fmadd_pd(p, r, splat(0.0013333558146428443));
  p = _mm256_fmadd_pd(p, r, splat(0.009618129107628477));
  p = _mm256_fmadd_pd(p, r, splat(0.05550410866482158));
  p = _mm256_fmadd_pd(p, r, splat(0.24022650695910072));
  p = _mm256_fmadd_pd(p, r, splat(0.6931471805599453));
  p = _mm256_fmadd_pd(p, r, splat(1.0));

  // Two-step scaling keeps 2^(k/2) representable and lets extreme k saturate
  // to 0/inf through ordinary multiplication.
  const __m256d k_cl = _mm256_min_pd(_mm256_max_pd(k, splat(-1300.0)), splat(1100.0));
  const __m256d k1 = _mm256_round_pd(_mm256_mul_pd(k_cl, splat(0.5)),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d k2 = _mm256_sub_pd(k_cl, k1);
  return _mm256_mul_pd(_mm256_mul_pd(p, exp2_int(k1)), exp2_int(k2));
}

// x^y for positive normal x.
inline __m256d pow_vec(__m256d x, __m256d y) {
  const Vec2d l = log2_dd(x);
  const __m256d t_hi = _mm256_mul_pd(y, l.hi);
  const __m256d t_err = _mm256_fmsub_pd(y, l.hi, t_hi);
  const __m256d t_lo = _mm256_fmadd_pd(y, l.lo, t_err);
  return exp2_dd(t_hi, t_lo);
}

// ln(x) = log2(x) * ln2, collapsed back to a single double.
inline __m256d log_vec(__m256d x) {
  const Vec2d l = log2_dd(x);
  const __m256d h = _mm256_mul_pd(l.hi, splat(0.6931471805599453));
  const __m256d err = _mm256_fmsub_pd(l.hi, splat(0.6931471805599453), h);
  const __m256d tail = _mm256_fmadd_pd(l.hi, splat(2.3190468138462996e-17),
                                       _mm256_fmadd_pd(l.lo, splat(0.6931471805599453), err));
  return _mm256_add_pd(h, tail);
}

struct CompensatedSumVec {
  __m256d sum = _mm256_setzero_pd();
  __m256d carry = _mm256_setzero_pd();

  void add(__m256d term) {
    const __m256d y = _mm256_sub_pd(term, carry);
    const __m256d t = _mm256_add_pd(sum, y);
    carry = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
    sum = t;
  }

  // Corrected lane values, combined with scalar compensation.
  double reduce(double extra_sum, double extra_carry) const {
    alignas(32) double s[4];
    alignas(32) double c[4];
    _mm256_store_pd(s, sum);
    _mm256_store_pd(c, carry);
    double acc = extra_sum - extra_carry;
    double comp = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double y = (s[i] - c[i]) - comp;
      const double t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
    return acc;
  }
};

double pow_sum_avx2(double base, std::size_t count, double exponent) {
  const __m256d y = splat(-exponent);
  const __m256d step = splat(4.0);
  __m256d x = _mm256_add_pd(splat(base), _mm256_set_pd(3.0, 2.0, 1.0, 0.0));
  CompensatedSumVec acc;
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    acc.add(pow_vec(x, y));
    x = _mm256_add_pd(x, step);
  }
  double tail_sum = 0.0, tail_carry = 0.0;
  for (; i < count; ++i) {
    const double y2 = std::pow(base + static_cast<double>(i), -exponent) - tail_carry;
    const double t = tail_sum + y2;
    tail_carry = (t - tail_sum) - y2;
    tail_sum = t;
  }
  return acc.reduce(tail_sum, tail_carry);
}

double sum_log_avx2(const std::uint64_t* values, std::size_t count) {
  CompensatedSumVec acc;
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i));
    acc.add(log_vec(u64_to_f64(v)));
  }
  double tail_sum = 0.0, tail_carry = 0.0;
  for (; i < count; ++i) {
    const double y = std::log(static_cast<double>(values[i])) - tail_carry;
    const double t = tail_sum + y;
    tail_carry = (t - tail_sum) - y;
    tail_sum = t;
  }
  return acc.reduce(tail_sum, tail_carry);
}

void continuous_inverse_avx2(const double* u, std::size_t count, double alpha,
                             std::uint64_t x_min, std::uint64_t* out) {
  const double scale = static_cast<double>(x_min) - 0.5;
  const double inv_exponent = -1.0 / (alpha - 1.0);
  const double floor_value = static_cast<double>(x_min);
  const __m256d y = splat(inv_exponent);
  const __m256d one = splat(1.0);

  std::size_t i = 0;
  alignas(32) double v[4];
  for (; i + 4 <= count; i += 4) {
    const __m256d base = _mm256_sub_pd(one, _mm256_loadu_pd(u + i));
    const __m256d pw = pow_vec(base, y);
    // mul+add (not fused) to match the scalar kernel's rounding points
    const __m256d val = _mm256_floor_pd(
        _mm256_add_pd(_mm256_mul_pd(splat(scale), pw), splat(0.5)));
    _mm256_store_pd(v, val);
    for (int lane = 0; lane < 4; ++lane) {
      if (v[lane] >= 0x1p63) {
        out[i + lane] = kValueOverflow;
      } else if (v[lane] <= floor_value) {
        out[i + lane] = x_min;
      } else {
        out[i + lane] = static_cast<std::uint64_t>(v[lane]);
      }
    }
  }
  for (; i < count; ++i) {
    const double w = std::floor(scale * std::pow(1.0 - u[i], inv_exponent) + 0.5);
    if (w >= 0x1p63) {
      out[i] = kValueOverflow;
    } else if (w <= floor_value) {
      out[i] = x_min;
    } else {
      out[i] = static_cast<std::uint64_t>(w);
    }
  }
}

}  // namespace

const Kernels* avx2_kernels_impl() {
  static const Kernels table{"avx2", &pow_sum_avx2, &sum_log_avx2,
                             &continuous_inverse_avx2};
  return &table;
}

}  // namespace powerlaw::kernels
