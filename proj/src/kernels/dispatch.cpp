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

#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace twomode::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(TWOMODE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() {
  const KernelTable* fast = avx2();
  if (const char* env = std::getenv("TWOMODE_KERNELS")) {
    const std::string_view want(env);
    if (want == "scalar") return scalar();
    if (want == "avx2" && fast != nullptr) return *fast;
  }
  return fast != nullptr ? *fast : scalar();
}

}  // namespace

const KernelTable& scalar() { return detail::kScalarTable; }

const KernelTable* avx2() {
#if defined(TWOMODE_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

double weighted_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b) {
  return active().weighted_dot(w.data(), a.data(), b.data(), w.size());
}

std::complex<double> fourier_row(std::span<const double> amp, std::span<const double> x,
                                 double k, double phase0) {
  return active().fourier_row(amp.data(), x.data(), amp.size(), k, phase0);
}

}  // namespace twomode::kernels
