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

#include <utility>

#include "cczsim/operator.hpp"

namespace ccz {

enum class Parity : int { Even = 1, Odd = -1 };

// Single-mode photonic logical state with definite photon-number parity.
// Coefficients of the wrong parity are exactly zero and the norm is one.
class ParityState {
 public:
  // Validates parity and normalization (1e-12); throws NotAnEigenstate.
  ParityState(Vector coefficients, Parity parity);

  const Vector& coefficients() const noexcept { return coefficients_; }
  Parity parity() const noexcept { return parity_; }
  int dim() const noexcept { return static_cast<int>(coefficients_.size()); }

 private:
  Vector coefficients_;
  Parity parity_;
};

// (|phi_e>, |phi_o>)
struct LogicalPair {
  ParityState even;
  ParityState odd;
};

// Largest admissible probability mass of either cat above the truncation.
inline constexpr double kCatTailTolerance = 1e-6;

struct CatSpec {
  double alpha = 0.5;
  int dim = 6;
  double tail_tolerance = kCatTailTolerance;
};

double cat_normalization(double alpha, Parity parity);

// diag((-1)^n)
SparseMatrix parity_operator(int dim);

// (|2m>, |2n+1>) on a cavity of the given dimension.
LogicalPair fock_pair(int m, int n, int dim);

// Even and odd cats N(|alpha> +- |-alpha>); throws TruncationError when the
// probability mass of either cat above the truncation exceeds the tolerance.
LogicalPair cat_pair(const CatSpec& spec);

// Smallest dim for which both untruncated cats keep less than the tolerance
// above it.
int required_cat_dim(double alpha, double tail_tolerance = kCatTailTolerance);

// Eigenvalue of the parity operator if ||P psi -+ psi|| < 1e-10.
Parity validate_parity(const Vector& state);

// Arbitrary user coefficients; normalizes, then validates parity.
ParityState make_parity_state(Vector coefficients);

// Pad or check a pair against a cavity truncation.
Vector embed(const ParityState& state, int dim);

}  // namespace ccz
