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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cczsim/kernels/kernels.hpp"

namespace ccz::kernels {

#ifndef CCZSIM_HAVE_AVX2_TU
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2_kernels() != nullptr && __builtin_cpu_supports("avx2") &&
             __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

namespace {

const KernelTable& detect() {
  if (const char* env = std::getenv("CCZSIM_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return scalar_kernels();
    if (want == "avx2" && cpu_supports(Isa::Avx2)) return *avx2_kernels();
  }
  if (cpu_supports(Isa::Avx2)) return *avx2_kernels();
  return scalar_kernels();
}

std::atomic<const KernelTable*> forced{nullptr};

}  // namespace

const KernelTable& active() {
  if (const KernelTable* f = forced.load(std::memory_order_acquire)) return *f;
  static const KernelTable& chosen = detect();
  return chosen;
}

void select(Isa isa) {
  if (!cpu_supports(isa)) throw std::runtime_error("requested kernel ISA not supported on this CPU");
  forced.store(isa == Isa::Scalar ? &scalar_kernels() : avx2_kernels(), std::memory_order_release);
}

void reset_selection() { forced.store(nullptr, std::memory_order_release); }

}  // namespace ccz::kernels
