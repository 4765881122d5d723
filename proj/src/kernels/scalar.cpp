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

#include "cczsim/kernels/kernels.hpp"

namespace ccz::kernels {

namespace {

void caxpy_ref(std::size_t n, cplx a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void cscal_ref(std::size_t n, cplx a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
}

void raxpy_ref(std::size_t n, double a, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpay_ref(std::size_t n, const cplx* x, double a, const cplx* y, cplx* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + a * y[i];
}

void cmul_acc_ref(std::size_t n, const cplx* w, const cplx* x, cplx* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] += w[i] * x[i];
}

void cmul_acc_scaled_ref(std::size_t n, cplx a, const cplx* w, const cplx* x, cplx* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] += a * (w[i] * x[i]);
}

void add_adjoint_ref(std::size_t d, const cplx* x, cplx* out) {
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out[i * d + j] = x[i * d + j] + std::conj(x[j * d + i]);
  }
}

void sandwich_ref(std::size_t d, std::size_t m, const int* rows, const int* cols, const cplx* coef,
                  const cplx* rho, cplx* out) {
  for (std::size_t p = 0; p < m; ++p) {
    const cplx* src = rho + static_cast<std::size_t>(cols[p]) * d;
    cplx* dst = out + static_cast<std::size_t>(rows[p]) * d;
    const cplx cp = coef[p];
    for (std::size_t q = 0; q < m; ++q) dst[rows[q]] += cp * std::conj(coef[q]) * src[cols[q]];
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",       caxpy_ref,           cscal_ref,
                                 raxpy_ref,      xpay_ref,            cmul_acc_ref,
                                 cmul_acc_scaled_ref, add_adjoint_ref, sandwich_ref};
  return table;
}

}  // namespace ccz::kernels
