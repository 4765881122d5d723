// Copyright 2026 The cczsim Authors
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

// Built with -mavx2 -mfma. Nothing in here may run before the dispatcher has
// confirmed CPU support.

#include <immintrin.h>

#include "cczsim/kernels/kernels.hpp"

namespace ccz::kernels {

namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m128d load1(const cplx* p) { return _mm_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store1(cplx* p, __m128d v) { _mm_storeu_pd(reinterpret_cast<double*>(p), v); }

// a * x for packed complex a and x.
inline __m256d cmul(__m256d a, __m256d x) {
  const __m256d ar = _mm256_movedup_pd(a);
  const __m256d ai = _mm256_permute_pd(a, 0xF);
  const __m256d xs = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xs));
}

inline __m256d conj2(__m256d v) {
  return _mm256_xor_pd(v, _mm256_set_pd(-0.0, 0.0, -0.0, 0.0));
}

void caxpy_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = load2(x + i);
    const __m256d x1 = load2(x + i + 2);
    __m256d y0 = load2(y + i);
    __m256d y1 = load2(y + i + 2);
    y0 = _mm256_addsub_pd(_mm256_fmadd_pd(ar, x0, y0), _mm256_mul_pd(ai, _mm256_permute_pd(x0, 0x5)));
    y1 = _mm256_addsub_pd(_mm256_fmadd_pd(ar, x1, y1), _mm256_mul_pd(ai, _mm256_permute_pd(x1, 0x5)));
    store2(y + i, y0);
    store2(y + i + 2, y1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = load2(x + i);
    __m256d y0 = load2(y + i);
    y0 = _mm256_addsub_pd(_mm256_fmadd_pd(ar, x0, y0), _mm256_mul_pd(ai, _mm256_permute_pd(x0, 0x5)));
    store2(y + i, y0);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void cscal_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const __m256d av = _mm256_set_pd(a.imag(), a.real(), a.imag(), a.real());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    store2(y + i, cmul(av, load2(x + i)));
    store2(y + i + 2, cmul(av, load2(x + i + 2)));
  }
  for (; i + 2 <= n; i += 2) store2(y + i, cmul(av, load2(x + i)));
  for (; i < n; ++i) y[i] = a * x[i];
}

void raxpy_avx2(std::size_t n, double a, const cplx* x, cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const std::size_t len = 2 * n;
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    _mm256_storeu_pd(yd + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(xd + i), _mm256_loadu_pd(yd + i)));
    _mm256_storeu_pd(yd + i + 4,
                     _mm256_fmadd_pd(av, _mm256_loadu_pd(xd + i + 4), _mm256_loadu_pd(yd + i + 4)));
  }
  for (; i + 4 <= len; i += 4) {
    _mm256_storeu_pd(yd + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(xd + i), _mm256_loadu_pd(yd + i)));
  }
  for (; i < len; ++i) yd[i] += a * xd[i];
}

void xpay_avx2(std::size_t n, const cplx* x, double a, const cplx* y, cplx* out) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  double* od = reinterpret_cast<double*>(out);
  const std::size_t len = 2 * n;
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    _mm256_storeu_pd(od + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(yd + i), _mm256_loadu_pd(xd + i)));
  }
  for (; i < len; ++i) od[i] = xd[i] + a * yd[i];
}

void cmul_acc_avx2(std::size_t n, const cplx* w, const cplx* x, cplx* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(out + i, _mm256_add_pd(load2(out + i), cmul(load2(w + i), load2(x + i))));
  }
  for (; i < n; ++i) out[i] += w[i] * x[i];
}

void cmul_acc_scaled_avx2(std::size_t n, cplx a, const cplx* w, const cplx* x, cplx* out) {
  const __m256d av = _mm256_set_pd(a.imag(), a.real(), a.imag(), a.real());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(out + i, _mm256_add_pd(load2(out + i), cmul(av, cmul(load2(w + i), load2(x + i)))));
  }
  for (; i < n; ++i) out[i] += a * (w[i] * x[i]);
}

// 2x2 complex tiles: rows i, i+1 of x against rows j, j+1 transposed.
void add_adjoint_avx2(std::size_t d, const cplx* x, cplx* out) {
  std::size_t i = 0;
  for (; i + 2 <= d; i += 2) {
    std::size_t j = 0;
    for (; j + 2 <= d; j += 2) {
      const __m256d a0 = load2(x + i * d + j);          // x[i][j], x[i][j+1]
      const __m256d a1 = load2(x + (i + 1) * d + j);    // x[i+1][j], x[i+1][j+1]
      const __m256d b0 = load2(x + j * d + i);          // x[j][i], x[j][i+1]
      const __m256d b1 = load2(x + (j + 1) * d + i);    // x[j+1][i], x[j+1][i+1]
      // Transpose of the b tile: [x[j][i], x[j+1][i]] and [x[j][i+1], x[j+1][i+1]].
      const __m256d t0 = _mm256_permute2f128_pd(b0, b1, 0x20);
      const __m256d t1 = _mm256_permute2f128_pd(b0, b1, 0x31);
      store2(out + i * d + j, _mm256_add_pd(a0, conj2(t0)));
      store2(out + (i + 1) * d + j, _mm256_add_pd(a1, conj2(t1)));
    }
    for (; j < d; ++j) {
      out[i * d + j] = x[i * d + j] + std::conj(x[j * d + i]);
      out[(i + 1) * d + j] = x[(i + 1) * d + j] + std::conj(x[j * d + i + 1]);
    }
  }
  for (; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out[i * d + j] = x[i * d + j] + std::conj(x[j * d + i]);
  }
}

void sandwich_avx2(std::size_t d, std::size_t m, const int* rows, const int* cols, const cplx* coef,
                   const cplx* rho, cplx* out) {
  for (std::size_t p = 0; p < m; ++p) {
    const cplx* src = rho + static_cast<std::size_t>(cols[p]) * d;
    cplx* dst = out + static_cast<std::size_t>(rows[p]) * d;
    const __m256d cp = _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(coef + p));
    std::size_t q = 0;
    for (; q + 2 <= m; q += 2) {
      const __m256d cq = conj2(load2(coef + q));
      const __m256d v = _mm256_set_m128d(load1(src + cols[q + 1]), load1(src + cols[q]));
      const __m256d prod = cmul(cmul(cp, cq), v);
      cplx* d0 = dst + rows[q];
      cplx* d1 = dst + rows[q + 1];
      store1(d0, _mm_add_pd(load1(d0), _mm256_castpd256_pd128(prod)));
      store1(d1, _mm_add_pd(load1(d1), _mm256_extractf128_pd(prod, 1)));
    }
    for (; q < m; ++q) dst[rows[q]] += coef[p] * std::conj(coef[q]) * src[cols[q]];
  }
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2",         caxpy_avx2,           cscal_avx2,
                                 raxpy_avx2,     xpay_avx2,            cmul_acc_avx2,
                                 cmul_acc_scaled_avx2, add_adjoint_avx2, sandwich_avx2};
  return &table;
}

}  // namespace ccz::kernels
