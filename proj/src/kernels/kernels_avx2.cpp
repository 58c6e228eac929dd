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

// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after the runtime CPU check in dispatch.cpp.

#include <immintrin.h>

#include <cstdint>
#include <cstring>

#include "kernels_impl.hpp"

namespace twomode::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double weighted_dot_avx2(const double* w, const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d wa0 = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i));
    const __m256d wa1 = _mm256_mul_pd(_mm256_loadu_pd(w + i + 4), _mm256_loadu_pd(a + i + 4));
    acc0 = _mm256_fmadd_pd(wa0, _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(wa1, _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d wa = _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i));
    acc0 = _mm256_fmadd_pd(wa, _mm256_loadu_pd(b + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += w[i] * a[i] * b[i];
  return s;
}

// sin and cos of four doubles. theta = n pi/2 + z with n = round(2 theta/pi)
// and pi/2 split in three parts (Cody-Waite), then minimax polynomials on
// |z| <= pi/4. Absolute error is a few ulp for |theta| up to ~1e6.
struct SinCos {
  __m256d sin;
  __m256d cos;
};

inline SinCos sincos4(__m256d theta) {
  const __m256d two_over_pi = _mm256_set1_pd(0.63661977236758134308);
  const __m256d pio2_1 = _mm256_set1_pd(2.0 * 7.85398125648498535156e-1);
  const __m256d pio2_2 = _mm256_set1_pd(2.0 * 3.77489470793079817668e-8);
  const __m256d pio2_3 = _mm256_set1_pd(2.0 * 2.69515142907905952645e-15);

  const __m256d n = _mm256_round_pd(_mm256_mul_pd(theta, two_over_pi),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d z = _mm256_fnmadd_pd(n, pio2_1, theta);
  z = _mm256_fnmadd_pd(n, pio2_2, z);
  z = _mm256_fnmadd_pd(n, pio2_3, z);
  const __m256d zz = _mm256_mul_pd(z, z);

  __m256d ps = _mm256_set1_pd(1.58962301576546568060e-10);
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-2.50507477628578072866e-8));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(2.75573136213857245213e-6));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.98412698295895385996e-4));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(8.33333333332211858878e-3));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.66666666666666307295e-1));
  const __m256d sz = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), ps, z);

  __m256d pc = _mm256_set1_pd(-1.13585365213876817300e-11);
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.08757008419747316778e-9));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-2.75573141792967388112e-7));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.48015872888517045348e-5));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-1.38888888888730564116e-3));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(4.16666666666665929218e-2));
  const __m256d cz = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), pc,
                                     _mm256_fnmadd_pd(_mm256_set1_pd(0.5), zz,
                                                      _mm256_set1_pd(1.0)));

  // Quadrant bits from the integer value of n (exact after adding 2^52 + 2^51,
  // which also keeps negative n representable).
  const __m256i q = _mm256_castpd_si256(_mm256_add_pd(n, _mm256_set1_pd(6755399441055744.0)));
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
  const __m256d sin_flip = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(q, two), 62));
  const __m256d cos_flip = _mm256_castsi256_pd(
      _mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(q, one), two), 62));

  SinCos out;
  out.sin = _mm256_xor_pd(_mm256_blendv_pd(sz, cz, swap), sin_flip);
  out.cos = _mm256_xor_pd(_mm256_blendv_pd(cz, sz, swap), cos_flip);
  return out;
}

std::complex<double> fourier_row_avx2(const double* amp, const double* x, std::size_t n,
                                      double k, double phase0) {
  const __m256d vk = _mm256_set1_pd(k);
  const __m256d vp = _mm256_set1_pd(phase0);
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d theta = _mm256_fmadd_pd(vk, _mm256_loadu_pd(x + i), vp);
    const SinCos sc = sincos4(theta);
    const __m256d a = _mm256_loadu_pd(amp + i);
    re = _mm256_fmadd_pd(a, sc.cos, re);
    im = _mm256_fmadd_pd(a, sc.sin, im);
  }
  if (i < n) {
    alignas(32) double ta[4] = {0.0, 0.0, 0.0, 0.0};
    alignas(32) double tx[4] = {0.0, 0.0, 0.0, 0.0};
    std::memcpy(ta, amp + i, (n - i) * sizeof(double));
    std::memcpy(tx, x + i, (n - i) * sizeof(double));
    const __m256d theta = _mm256_fmadd_pd(vk, _mm256_load_pd(tx), vp);
    const SinCos sc = sincos4(theta);
    const __m256d a = _mm256_load_pd(ta);
    re = _mm256_fmadd_pd(a, sc.cos, re);
    im = _mm256_fmadd_pd(a, sc.sin, im);
  }
  return {hsum(re), hsum(im)};
}

}  // namespace

const KernelTable kAvx2Table{"avx2", &weighted_dot_avx2, &fourier_row_avx2};

}  // namespace twomode::kernels::detail
