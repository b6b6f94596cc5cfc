// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw/kernels.hpp"

namespace powerlaw::kernels {

// Defined in kernel_avx2.cpp; returns nullptr on non-x86 builds.
const Kernels* avx2_kernels_impl();

const Kernels* avx2_kernels() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return avx2_kernels_impl();
  }
#endif
  return nullptr;
}

const Kernels& active_kernels() {
  static const Kernels& chosen = []() -> const Kernels& {
    if (const Kernels* simd = avx2_kernels()) return *simd;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace powerlaw::kernels
