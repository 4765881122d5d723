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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cczsim/kernels/kernels.hpp"

using namespace ccz::kernels;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Sizes straddling the vector width and the unroll factor.
constexpr std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 143, 144, 1001};
constexpr double kTol = 1e-13;

struct Pair {
  const KernelTable& ref;
  const KernelTable& fast;
};

std::vector<Pair> pairs() {
  std::vector<Pair> out{{scalar_kernels(), scalar_kernels()}};
  if (const KernelTable* a = avx2_kernels(); a && cpu_supports(Isa::Avx2)) {
    out.push_back({scalar_kernels(), *a});
  }
  return out;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar kernels match their definitions") {
    std::mt19937_64 rng(1);
    const KernelTable& k = scalar_kernels();
    const auto x = random_vec(5, rng), w = random_vec(5, rng);
    auto y = random_vec(5, rng);
    const auto y0 = y;
    const cplx a(0.3, -1.2);
    k.caxpy(5, a, x.data(), y.data());
    for (int i = 0; i < 5; ++i) CHECK(std::abs(y[i] - (y0[i] + a * x[i])) < 1e-15);
    k.cscal(5, a, x.data(), y.data());
    for (int i = 0; i < 5; ++i) CHECK(std::abs(y[i] - a * x[i]) < 1e-15);
    std::vector<cplx> out(5);
    k.xpay(5, x.data(), 0.5, w.data(), out.data());
    for (int i = 0; i < 5; ++i) CHECK(std::abs(out[i] - (x[i] + 0.5 * w[i])) < 1e-15);
    const std::vector<cplx> m{{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    std::vector<cplx> adj(4);
    k.add_adjoint(2, m.data(), adj.data());
    CHECK(adj[0] == cplx(2, 0));
    CHECK(adj[1] == cplx(3 + 5, 4 - 6));
    CHECK(adj[2] == std::conj(adj[1]));
  }

  TEST_CASE("sandwich applies L rho L^dagger") {
    // L = 2|0><1| + i|2><0| on a 3-level space.
    const std::size_t d = 3;
    const int rows[] = {0, 2};
    const int cols[] = {1, 0};
    const cplx coef[] = {2.0, {0.0, 1.0}};
    std::mt19937_64 rng(2);
    const auto rho = random_vec(d * d, rng);
    std::vector<cplx> out(d * d, 0.0);
    scalar_kernels().sandwich(d, 2, rows, cols, coef, rho.data(), out.data());
    std::vector<cplx> l(d * d, 0.0);
    l[0 * d + 1] = 2.0;
    l[2 * d + 0] = {0.0, 1.0};
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        cplx s = 0.0;
        for (std::size_t p = 0; p < d; ++p) {
          for (std::size_t q = 0; q < d; ++q) s += l[i * d + p] * rho[p * d + q] * std::conj(l[j * d + q]);
        }
        CHECK(std::abs(out[i * d + j] - s) < 1e-14);
      }
    }
  }

  TEST_CASE("vector kernels agree with the scalar reference") {
    std::mt19937_64 rng(5);
    const cplx a(-0.7, 0.45);
    const double r = 1.0 / 3.0;
    for (const Pair& p : pairs()) {
      CAPTURE(p.fast.name);
      for (std::size_t n : kSizes) {
        CAPTURE(n);
        const auto x = random_vec(n, rng), w = random_vec(n, rng), y0 = random_vec(n, rng);
        auto ya = y0, yb = y0;
        p.ref.caxpy(n, a, x.data(), ya.data());
        p.fast.caxpy(n, a, x.data(), yb.data());
        CHECK(max_diff(ya, yb) < kTol);
        p.ref.cscal(n, a, x.data(), ya.data());
        p.fast.cscal(n, a, x.data(), yb.data());
        CHECK(max_diff(ya, yb) < kTol);
        ya = y0, yb = y0;
        p.ref.raxpy(n, r, x.data(), ya.data());
        p.fast.raxpy(n, r, x.data(), yb.data());
        CHECK(max_diff(ya, yb) < kTol);
        p.ref.xpay(n, x.data(), r, w.data(), ya.data());
        p.fast.xpay(n, x.data(), r, w.data(), yb.data());
        CHECK(max_diff(ya, yb) < kTol);
        ya = y0, yb = y0;
        p.ref.cmul_acc(n, w.data(), x.data(), ya.data());
        p.fast.cmul_acc(n, w.data(), x.data(), yb.data());
        CHECK(max_diff(ya, yb) < kTol);
        ya = y0, yb = y0;
        p.ref.cmul_acc_scaled(n, a, w.data(), x.data(), ya.data());
        p.fast.cmul_acc_scaled(n, a, w.data(), x.data(), yb.data());
        CHECK(max_diff(ya, yb) < kTol);
      }
    }
  }

  TEST_CASE("matrix kernels agree with the scalar reference") {
    std::mt19937_64 rng(8);
    for (const Pair& p : pairs()) {
      CAPTURE(p.fast.name);
      for (std::size_t d : {1, 2, 3, 5, 8, 13, 24, 144}) {
        CAPTURE(d);
        const auto x = random_vec(d * d, rng);
        std::vector<cplx> oa(d * d), ob(d * d);
        p.ref.add_adjoint(d, x.data(), oa.data());
        p.fast.add_adjoint(d, x.data(), ob.data());
        CHECK(max_diff(oa, ob) < kTol);

        std::vector<int> rows(d), cols(d);
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        const std::size_t m = (d + 1) / 2;
        const auto coef = random_vec(m, rng);
        const auto base = random_vec(d * d, rng);
        oa = base, ob = base;
        p.ref.sandwich(d, m, rows.data(), cols.data(), coef.data(), x.data(), oa.data());
        p.fast.sandwich(d, m, rows.data(), cols.data(), coef.data(), x.data(), ob.data());
        CHECK(max_diff(oa, ob) < kTol * 10);
      }
    }
  }

  TEST_CASE("runtime selection") {
    reset_selection();
    const KernelTable& def = active();
    CHECK(cpu_supports(Isa::Scalar));
    select(Isa::Scalar);
    CHECK(active().name == "scalar");
    if (cpu_supports(Isa::Avx2) && avx2_kernels()) {
      select(Isa::Avx2);
      CHECK(active().name == avx2_kernels()->name);
    } else {
      CHECK_THROWS(select(Isa::Avx2));
    }
    reset_selection();
    CHECK(active().name == def.name);
  }
}
