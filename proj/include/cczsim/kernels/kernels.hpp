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

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace ccz::kernels {

using cplx = std::complex<double>;

// Dense inner loops of the propagators. Every entry point has a scalar
// reference implementation; wider-ISA variants must agree with it to
// rounding. Matrices are row-major d x d.
struct KernelTable {
  std::string_view name;

  // y += a * x
  void (*caxpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
  // y = a * x
  void (*cscal)(std::size_t n, cplx a, const cplx* x, cplx* y);
  // y += a * x, real a
  void (*raxpy)(std::size_t n, double a, const cplx* x, cplx* y);
  // out = x + a * y, real a
  void (*xpay)(std::size_t n, const cplx* x, double a, const cplx* y, cplx* out);
  // out += w .* x
  void (*cmul_acc)(std::size_t n, const cplx* w, const cplx* x, cplx* out);
  // out += a * (w .* x)
  void (*cmul_acc_scaled)(std::size_t n, cplx a, const cplx* w, const cplx* x, cplx* out);
  // out = x + x^dagger
  void (*add_adjoint)(std::size_t d, const cplx* x, cplx* out);
  // out[rows[p], rows[q]] += coef[p] * conj(coef[q]) * rho[cols[p], cols[q]]
  // for all p, q < m: the sandwich L rho L^dagger of a matrix with at most one
  // nonzero per row.
  void (*sandwich)(std::size_t d, std::size_t m, const int* rows, const int* cols,
                   const cplx* coef, const cplx* rho, cplx* out);
};

enum class Isa { Scalar, Avx2 };

const KernelTable& scalar_kernels();
// nullptr when the AVX2 unit was not compiled in.
const KernelTable* avx2_kernels();

bool cpu_supports(Isa isa);

// Best table for the running CPU. CCZSIM_KERNELS=scalar|avx2 overrides the
// choice; an unsupported request falls back to scalar.
const KernelTable& active();
// Force a table (tests, benchmarks). Throws if the CPU cannot run it.
void select(Isa isa);
// Drop a forced selection and return to automatic detection.
void reset_selection();

}  // namespace ccz::kernels
