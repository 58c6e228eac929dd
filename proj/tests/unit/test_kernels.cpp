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
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "twomode/kernels.hpp"

using namespace twomode;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

// Straightforward sums in long double for reference.
long double dot_ref(const std::vector<double>& w, const std::vector<double>& a,
                    const std::vector<double>& b) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<long double>(w[i]) * a[i] * b[i];
  return s;
}

std::complex<long double> row_ref(const std::vector<double>& amp, const std::vector<double>& x,
                                  double k, double phase0) {
  std::complex<long double> s = 0.0L;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    const long double ph = static_cast<long double>(phase0) + static_cast<long double>(k) * x[i];
    s += std::complex<long double>(amp[i] * std::cos(ph), amp[i] * std::sin(ph));
  }
  return s;
}

}  // namespace

TEST_CASE("scalar kernels match long double sums") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 1001u}) {
    const auto w = random_vector(rng, n, 0.0, 1.0);
    const auto a = random_vector(rng, n, -1.0, 1.0);
    const auto b = random_vector(rng, n, -1.0, 1.0);
    const auto& k = kernels::scalar();
    CHECK(std::abs(k.weighted_dot(w.data(), a.data(), b.data(), n) - double(dot_ref(w, a, b))) <=
          1e-13 * (1.0 + n));
    const auto x = random_vector(rng, n, -20.0, 20.0);
    const auto got = k.fourier_row(a.data(), x.data(), n, 1.7, 0.3);
    const auto want = row_ref(a, x, 1.7, 0.3);
    CHECK(std::abs(got.real() - double(want.real())) <= 1e-12 * (1.0 + n));
    CHECK(std::abs(got.imag() - double(want.imag())) <= 1e-12 * (1.0 + n));
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const auto* simd = kernels::avx2();
  if (simd == nullptr) {
    MESSAGE("avx2 kernels unavailable on this machine; skipped");
    return;
  }
  const auto& ref = kernels::scalar();
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 8u, 9u, 15u, 16u, 17u, 255u, 4096u}) {
    const auto w = random_vector(rng, n, 0.0, 1.0);
    const auto a = random_vector(rng, n, -1.0, 1.0);
    const auto b = random_vector(rng, n, -1.0, 1.0);
    const double d0 = ref.weighted_dot(w.data(), a.data(), b.data(), n);
    const double d1 = simd->weighted_dot(w.data(), a.data(), b.data(), n);
    CHECK(std::abs(d0 - d1) <= 1e-14 * (1.0 + n));

    for (double k : {0.0, 0.37, 5.0, 250.0}) {
      const auto x = random_vector(rng, n, -30.0, 30.0);
      const auto r0 = ref.fourier_row(a.data(), x.data(), n, k, -1.1);
      const auto r1 = simd->fourier_row(a.data(), x.data(), n, k, -1.1);
      // Phases up to ~7500 rad lose a few ulps in the reduction.
      CHECK(std::abs(r0 - r1) <= 1e-12 * (1.0 + n));
    }
  }
}

TEST_CASE("avx2 sincos across a wide phase range") {
  const auto* simd = kernels::avx2();
  if (simd == nullptr) return;
  const std::size_t n = 20001;
  std::vector<double> x(n), amp(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) x[i] = -1.0e4 + i;
  for (std::size_t i = 0; i < n; i += 997) {
    std::fill(amp.begin(), amp.end(), 0.0);
    amp[i] = 1.0;
    const auto r = simd->fourier_row(amp.data(), x.data(), n, 1.0, 0.0);
    CHECK(r.real() == doctest::Approx(std::cos(x[i])).epsilon(1e-12));
    CHECK(r.imag() == doctest::Approx(std::sin(x[i])).epsilon(1e-12));
  }
}

TEST_CASE("active table is one of the compiled tables") {
  const auto& act = kernels::active();
  const bool known = &act == &kernels::scalar() || &act == kernels::avx2();
  CHECK(known);
}
