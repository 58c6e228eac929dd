// Copyright 2026 The twomode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>

// Inner-loop kernels for quadrature. Every kernel has a scalar reference
// implementation; SIMD variants must agree with it to rounding and are
// selected once at runtime. TWOMODE_KERNELS=scalar|avx2 overrides the choice.

namespace twomode::kernels {

struct KernelTable {
  const char* name;
  /// sum_i w[i] * a[i] * b[i]
  double (*weighted_dot)(const double* w, const double* a, const double* b,
                         std::size_t n);
  /// sum_i amp[i] * exp(i * (phase0 + k * x[i]))
  std::complex<double> (*fourier_row)(const double* amp, const double* x,
                                      std::size_t n, double k, double phase0);
};

const KernelTable& scalar();
/// nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2();
const KernelTable& active();

double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b);
std::complex<double> fourier_row(std::span<const double> amp,
                                 std::span<const double> x, double k,
                                 double phase0);

}  // namespace twomode::kernels
