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

#include <span>
#include <vector>

#include "cczsim/device.hpp"
#include "cczsim/operator.hpp"

namespace ccz {

// amplitude * exp(-i frequency t) * op
struct HamiltonianTerm {
  cplx amplitude;
  double frequency;
  Operator op;

  cplx coefficient(double t) const;
};

// Time-dependent Hamiltonian as an explicit sum of phased terms. Hermitian
// conjugates are stored as their own terms.
class Hamiltonian {
 public:
  explicit Hamiltonian(CompositeSpace space) : space_(space) {}

  void add(cplx amplitude, double frequency, Operator op);
  // Adds the term and its Hermitian conjugate.
  void add_with_conjugate(cplx amplitude, double frequency, const Operator& op);

  Operator at(double t) const;

  const CompositeSpace& space() const noexcept { return space_; }
  std::span<const HamiltonianTerm> terms() const noexcept { return terms_; }
  bool is_static() const;
  // Largest |frequency| over all terms (rad/s).
  double max_frequency() const;
  // Upper bound on ||H(t)||_inf valid for every t.
  double norm_bound() const;

 private:
  CompositeSpace space_;
  std::vector<HamiltonianTerm> terms_;
};

// g1 e^{-i delta1 t} a1^dag |g><f| + g2 e^{-i delta2 t} a2^dag |e><f| + h.c.
Hamiltonian ideal_hamiltonian(const CompositeSpace& space, const DeviceModel& model);

// Ideal terms plus the six unwanted atom-cavity couplings and the
// g12 e^{+i Delta12 t} a1^dag a2 crosstalk, each with its conjugate.
Hamiltonian full_hamiltonian(const CompositeSpace& space, const DeviceModel& model);

// Large-detuning form: Stark shifts on g, e, f plus the
// -lambda (e^{i Delta t} a1^dag a2 |g><e| + h.c.) exchange.
Hamiltonian exchange_effective_hamiltonian(const CompositeSpace& space, const DeviceModel& model);

// Static, diagonal: Stark shifts and the cross-Kerr chi terms on g and e.
Hamiltonian kerr_effective_hamiltonian(const CompositeSpace& space, const DeviceModel& model);

// Static, diagonal, g sector only: eta n1 |g><g| + chi n1 n2 |g><g|.
Hamiltonian gate_hamiltonian(const CompositeSpace& space, const DeviceModel& model);

}  // namespace ccz
