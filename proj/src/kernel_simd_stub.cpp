// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#include "powerlaw/kernels.hpp"

namespace powerlaw::kernels {
const Kernels* avx2_kernels_impl() { return nullptr; }
}  // namespace powerlaw::kernels
