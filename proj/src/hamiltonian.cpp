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

#include "cczsim/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

namespace ccz {

cplx HamiltonianTerm::coefficient(double t) const {
  if (frequency == 0.0) return amplitude;
  return amplitude * std::polar(1.0, -frequency * t);
}

void Hamiltonian::add(cplx amplitude, double frequency, Operator op) {
  require_same_space(space_, op.space());
  if (amplitude == cplx(0.0) || op.matrix().nonZeros() == 0) return;
  terms_.push_back({amplitude, frequency, std::move(op)});
}

void Hamiltonian::add_with_conjugate(cplx amplitude, double frequency, const Operator& op) {
  add(amplitude, frequency, op);
  add(std::conj(amplitude), -frequency, op.dagger());
}

Operator Hamiltonian::at(double t) const {
  SparseMatrix m(space_.dimension(), space_.dimension());
  for (const auto& term : terms_) m += term.coefficient(t) * term.op.matrix();
  return Operator(space_, std::move(m));
}

bool Hamiltonian::is_static() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const HamiltonianTerm& term) { return term.frequency == 0.0; });
}

double Hamiltonian::max_frequency() const {
  double f = 0.0;
  for (const auto& term : terms_) f = std::max(f, std::abs(term.frequency));
  return f;
}

double Hamiltonian::norm_bound() const {
  double bound = 0.0;
  for (const auto& term : terms_) {
    const SparseMatrix& m = term.op.matrix();
    double row_max = 0.0;
    for (int r = 0; r < m.outerSize(); ++r) {
      double row = 0.0;
      for (SparseMatrix::InnerIterator it(m, r); it; ++it) row += std::abs(it.value());
      row_max = std::max(row_max, row);
    }
    bound += std::abs(term.amplitude) * row_max;
  }
  return bound;
}

namespace {

struct Ops {
  Operator a1;
  Operator a2;
  Operator a1_dag;
  Operator a2_dag;
  Operator n1;
  Operator n2;
  Operator id;

  explicit Ops(const CompositeSpace& s)
      : a1(lift(annihilation(s.cavity1_dim()), Subsystem::Cavity1, s)),
        a2(lift(annihilation(s.cavity2_dim()), Subsystem::Cavity2, s)),
        a1_dag(a1.dagger()),
        a2_dag(a2.dagger()),
        n1(lift(number_operator(s.cavity1_dim()), Subsystem::Cavity1, s)),
        n2(lift(number_operator(s.cavity2_dim()), Subsystem::Cavity2, s)),
        id(Operator::identity(s)) {}
};

// Lowering operator |to><from| on the ququart, lifted.
Operator lowering(const CompositeSpace& s, Level from, Level to) {
  return lift(level_transition(from, to), Subsystem::Atom, s);
}

Operator projector(const CompositeSpace& s, Level level) {
  return lift(level_projector(level), Subsystem::Atom, s);
}

void add_ideal_terms(Hamiltonian& h, const Ops& o, const CompositeSpace& s,
                     const DeviceModel& model) {
  const auto& c = model.couplings();
  const auto& d = model.detuning();
  h.add_with_conjugate(c.g1, d.delta1, o.a1_dag * lowering(s, Level::F, Level::G));
  h.add_with_conjugate(c.g2, d.delta2, o.a2_dag * lowering(s, Level::F, Level::E));
}

}  // namespace

Hamiltonian ideal_hamiltonian(const CompositeSpace& space, const DeviceModel& model) {
  const Ops o(space);
  Hamiltonian h(space);
  add_ideal_terms(h, o, space, model);
  return h;
}

Hamiltonian full_hamiltonian(const CompositeSpace& space, const DeviceModel& model) {
  const Ops o(space);
  const auto& c = model.couplings();
  const auto& d = model.detuning();
  Hamiltonian h(space);
  add_ideal_terms(h, o, space, model);
  h.add_with_conjugate(c.g1_p, d.delta1_p, o.a1_dag * lowering(space, Level::F, Level::E));
  h.add_with_conjugate(c.g1_pp, d.delta1_pp, o.a1_dag * lowering(space, Level::E, Level::G));
  h.add_with_conjugate(c.g1_ppp, d.delta1_ppp, o.a1_dag * lowering(space, Level::E, Level::GPrime));
  h.add_with_conjugate(c.g2_p, d.delta2_p, o.a2_dag * lowering(space, Level::F, Level::G));
  h.add_with_conjugate(c.g2_pp, d.delta2_pp, o.a2_dag * lowering(space, Level::E, Level::G));
  h.add_with_conjugate(c.g2_ppp, d.delta2_ppp, o.a2_dag * lowering(space, Level::E, Level::GPrime));
  // Crosstalk carries e^{+i Delta12 t}.
  h.add_with_conjugate(c.g12, -d.Delta12, o.a1_dag * o.a2);
  return h;
}

Hamiltonian exchange_effective_hamiltonian(const CompositeSpace& space, const DeviceModel& model) {
  const Ops o(space);
  const auto& dc = model.derived();
  const auto& d = model.detuning();
  const Operator pg = projector(space, Level::G);
  const Operator pe = projector(space, Level::E);
  const Operator pf = projector(space, Level::F);
  Hamiltonian h(space);
  h.add(-dc.lambda1, 0.0, o.n1 * pg);
  h.add(dc.lambda1, 0.0, (o.id + o.n1) * pf);
  h.add(-dc.lambda2, 0.0, o.n2 * pe);
  h.add(dc.lambda2, 0.0, (o.id + o.n2) * pf);
  h.add_with_conjugate(-dc.lambda, -d.Delta, o.a1_dag * o.a2 * lowering(space, Level::E, Level::G));
  return h;
}

Hamiltonian kerr_effective_hamiltonian(const CompositeSpace& space, const DeviceModel& model) {
  const Ops o(space);
  const auto& dc = model.derived();
  const Operator pg = projector(space, Level::G);
  const Operator pe = projector(space, Level::E);
  const Operator pf = projector(space, Level::F);
  Hamiltonian h(space);
  h.add(-dc.lambda1, 0.0, o.n1 * pg);
  h.add(dc.lambda1, 0.0, (o.id + o.n1) * pf);
  h.add(-dc.lambda2, 0.0, o.n2 * pe);
  h.add(dc.lambda2, 0.0, (o.id + o.n2) * pf);
  h.add(dc.chi, 0.0, o.n1 * (o.id + o.n2) * pg);
  h.add(-dc.chi, 0.0, (o.id + o.n1) * o.n2 * pe);
  return h;
}

Hamiltonian gate_hamiltonian(const CompositeSpace& space, const DeviceModel& model) {
  const Ops o(space);
  const auto& dc = model.derived();
  const Operator pg = projector(space, Level::G);
  Hamiltonian h(space);
  h.add(dc.eta, 0.0, o.n1 * pg);
  h.add(dc.chi, 0.0, o.n1 * o.n2 * pg);
  return h;
}

}  // namespace ccz
