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

#include <cmath>

#include "kernels_impl.hpp"

namespace twomode::kernels::detail {

namespace {

double weighted_dot_scalar(const double* w, const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

std::complex<double> fourier_row_scalar(const double* amp, const double* x, std::size_t n,
                                        double k, double phase0) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = phase0 + k * x[i];
    re += amp[i] * std::cos(theta);
    im += amp[i] * std::sin(theta);
  }
  return {re, im};
}

}  // namespace

const KernelTable kScalarTable{"scalar", &weighted_dot_scalar, &fourier_row_scalar};

}  // namespace twomode::kernels::detail
