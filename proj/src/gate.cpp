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

#include "cczsim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cczsim/error.hpp"
#include "cczsim/hamiltonian.hpp"

namespace ccz {

Engine parse_engine(std::string_view name) {
  if (name == "ideal" || name == "ideal-diagonal") return Engine::IdealDiagonal;
  if (name == "eff6") return Engine::Eff6;
  if (name == "eff5") return Engine::Eff5;
  if (name == "eff4") return Engine::Eff4;
  if (name == "rwa") return Engine::Rwa;
  if (name == "full" || name == "full-closed") return Engine::FullClosed;
  if (name == "lossy" || name == "full-lossy") return Engine::FullLossy;
  throw ConfigError("unknown engine '" + std::string(name) + "'");
}

std::string_view to_string(Engine engine) {
  switch (engine) {
    case Engine::IdealDiagonal: return "ideal";
    case Engine::Eff6: return "eff6";
    case Engine::Eff5: return "eff5";
    case Engine::Eff4: return "eff4";
    case Engine::Rwa: return "rwa";
    case Engine::FullClosed: return "full";
    case Engine::FullLossy: return "lossy";
  }
  return "?";
}

bool is_open(Engine engine) noexcept { return engine == Engine::FullLossy; }

GateSchedule GateSchedule::from_model(const DeviceModel& model, Engine engine) {
  GateSchedule s;
  s.gate_time = model.derived().gate_time;
  s.k = model.derived().k;
  s.s = model.derived().s;
  s.engine = engine;
  return s;
}

double GateSchedule::closure_error(const DeviceModel& model) const {
  const double pi = std::numbers::pi;
  const auto& d = model.derived();
  const double chi_err = std::abs(d.chi * gate_time - pi);
  const double eta_err = std::abs(d.eta * gate_time - 2.0 * s * pi);
  return std::max(chi_err, eta_err) / pi;
}

cplx phase_factor(int n1, int n2, Level level, double eta, double chi, double t) {
  if (n1 < 0 || n2 < 0) throw InvalidDimension("photon numbers must be non-negative");
  switch (level) {
    case Level::GPrime: return 1.0;
    case Level::G: return std::polar(1.0, -(eta * n1 + chi * n1 * n2) * t);
    default:
      throw LogicalSpaceError("phase factor requested for level " + std::string(to_string(level)));
  }
}

PhaseTable::PhaseTable(const CompositeSpace& space, double eta, double chi, double t)
    : space_(space) {
  const int n1max = space.cavity1_dim();
  const int n2max = space.cavity2_dim();
  g_prime_.assign(static_cast<std::size_t>(n1max) * n2max, cplx(1.0));
  g_.resize(g_prime_.size());
  for (int n1 = 0; n1 < n1max; ++n1) {
    for (int n2 = 0; n2 < n2max; ++n2) {
      g_[static_cast<std::size_t>(n1) * n2max + n2] = phase_factor(n1, n2, Level::G, eta, chi, t);
    }
  }
}

cplx PhaseTable::at(int n1, int n2, Level level) const {
  if (n1 < 0 || n2 < 0 || n1 >= space_.cavity1_dim() || n2 >= space_.cavity2_dim()) {
    throw InvalidDimension("photon number outside the truncation");
  }
  const std::size_t i = static_cast<std::size_t>(n1) * space_.cavity2_dim() + n2;
  switch (level) {
    case Level::GPrime: return g_prime_[i];
    case Level::G: return g_[i];
    default:
      throw LogicalSpaceError("phase table has no entry for level " + std::string(to_string(level)));
  }
}

double PhaseTable::modulus_error() const {
  double worst = 0.0;
  for (const auto& v : {std::cref(g_prime_), std::cref(g_)}) {
    for (cplx a : v.get()) worst = std::max(worst, std::abs(std::abs(a) - 1.0));
  }
  return worst;
}

Operator ideal_gate_unitary(const CompositeSpace& space, double eta, double chi, double t) {
  const PhaseTable table(space, eta, chi, t);
  const int d = space.dimension();
  SparseMatrix u(d, d);
  u.reserve(Eigen::VectorXi::Constant(d, 1));
  for (int i = 0; i < d; ++i) {
    const BasisLabel b = space.label(i);
    const bool logical = b.level == Level::G || b.level == Level::GPrime;
    u.insert(i, i) = logical ? table.at(b.n1, b.n2, b.level) : cplx(1.0);
  }
  u.makeCompressed();
  return Operator(space, std::move(u));
}

namespace {

Vector atom_vector(cplx gp, cplx g) {
  Vector v = Vector::Zero(kAtomDim);
  v[static_cast<int>(Level::GPrime)] = gp;
  v[static_cast<int>(Level::G)] = g;
  return v;
}

Vector cavity_vector(const LogicalPair& pair, int dim, cplx even, cplx odd) {
  return even * embed(pair.even, dim) + odd * embed(pair.odd, dim);
}

std::string row_label(int l1, int l2, int l3) {
  std::string s = "|";
  s += l1 ? "phi_o " : "phi_e ";
  s += l2 ? "phi_o " : "phi_e ";
  s += l3 ? "g>" : "g'>";
  return s;
}

bool diagonal_static(const Hamiltonian& h) {
  if (!h.is_static()) return false;
  for (const auto& term : h.terms()) {
    const SparseMatrix& m = term.op.matrix();
    for (int r = 0; r < m.outerSize(); ++r) {
      for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
        if (it.row() != it.col()) return false;
      }
    }
  }
  return true;
}

// exp(-i H t) psi for a static diagonal H.
StateVector propagate_diagonal(const Hamiltonian& h, const StateVector& psi, double t) {
  const int d = h.space().dimension();
  Vector energy = Vector::Zero(d);
  for (const auto& term : h.terms()) {
    const SparseMatrix& m = term.op.matrix();
    for (int r = 0; r < m.outerSize(); ++r) {
      for (SparseMatrix::InnerIterator it(m, r); it; ++it) energy[r] += term.amplitude * it.value();
    }
  }
  Vector out = psi.amplitudes();
  for (int i = 0; i < d; ++i) out[i] *= std::exp(cplx(0.0, -1.0) * energy[i] * t);
  return StateVector(psi.space(), std::move(out));
}

Hamiltonian engine_hamiltonian(Engine engine, const CompositeSpace& space, const DeviceModel& model) {
  switch (engine) {
    case Engine::Eff6: return gate_hamiltonian(space, model);
    case Engine::Eff5: return kerr_effective_hamiltonian(space, model);
    case Engine::Eff4: return exchange_effective_hamiltonian(space, model);
    case Engine::Rwa: return ideal_hamiltonian(space, model);
    case Engine::FullClosed:
    case Engine::FullLossy: return full_hamiltonian(space, model);
    case Engine::IdealDiagonal: break;
  }
  return Hamiltonian(space);
}

}  // namespace

StateVector logical_basis_state(const LogicalPair& pair, const CompositeSpace& space, int l1, int l2,
                                int l3) {
  LogicalProduct p;
  p.q1 = l1 ? std::array<cplx, 2>{0.0, 1.0} : std::array<cplx, 2>{1.0, 0.0};
  p.q2 = l2 ? std::array<cplx, 2>{0.0, 1.0} : std::array<cplx, 2>{1.0, 0.0};
  p.q3 = l3 ? std::array<cplx, 2>{0.0, 1.0} : std::array<cplx, 2>{1.0, 0.0};
  return logical_product_state(pair, space, p);
}

StateVector logical_product_state(const LogicalPair& pair, const CompositeSpace& space,
                                  const LogicalProduct& a) {
  return StateVector::product(space, cavity_vector(pair, space.cavity1_dim(), a.q1[0], a.q1[1]),
                              cavity_vector(pair, space.cavity2_dim(), a.q2[0], a.q2[1]),
                              atom_vector(a.q3[0], a.q3[1]));
}

StateVector ideal_ccz_output(const LogicalPair& pair, const CompositeSpace& space,
                             const LogicalProduct& a) {
  StateVector out = logical_product_state(pair, space, a);
  // Subtract twice the (odd, odd, g) component.
  const cplx c = a.q1[1] * a.q2[1] * a.q3[1];
  if (c != cplx(0.0)) {
    const StateVector flip = logical_basis_state(pair, space, 1, 1, 1);
    out = out + flip.scaled(-2.0 * c);
  }
  return out;
}

EvolutionResult run_engine(const StateVector& input, const DeviceModel& model,
                           const GateSchedule& schedule) {
  const CompositeSpace& space = input.space();
  if (!(schedule.gate_time >= 0.0)) throw NumericalError("gate time must be non-negative");
  EvolutionResult result;
  if (schedule.engine == Engine::IdealDiagonal) {
    const auto& d = model.derived();
    result.psi = ideal_gate_unitary(space, d.eta, d.chi, schedule.gate_time).apply(input);
    return result;
  }
  const Hamiltonian h = engine_hamiltonian(schedule.engine, space, model);
  IntegratorConfig cfg = schedule.integrator;
  cfg.final_time = schedule.gate_time;
  if (schedule.engine == Engine::FullLossy) {
    LindbladModel lm{h, decoherence_channels(space, model.rates())};
    return evolve_master(DensityMatrix::from_pure(input), lm, cfg);
  }
  if (diagonal_static(h)) {
    result.psi = propagate_diagonal(h, input, schedule.gate_time);
    return result;
  }
  return evolve_schrodinger(input, h, cfg);
}

double logical_leakage(const LogicalPair& pair, const StateVector& psi) {
  double inside = 0.0;
  for (int l = 0; l < 8; ++l) {
    const StateVector b = logical_basis_state(pair, psi.space(), l >> 2 & 1, l >> 1 & 1, l & 1);
    inside += std::norm(b.inner(psi));
  }
  return std::max(0.0, psi.norm() * psi.norm() - inside);
}

double logical_leakage(const LogicalPair& pair, const DensityMatrix& rho) {
  double inside = 0.0;
  for (int l = 0; l < 8; ++l) {
    const StateVector b = logical_basis_state(pair, rho.space(), l >> 2 & 1, l >> 1 & 1, l & 1);
    inside += b.amplitudes().dot(rho.matrix() * b.amplitudes()).real();
  }
  return std::max(0.0, rho.trace().real() - inside);
}

double TruthTableReport::min_overlap() const {
  double m = 1.0;
  for (const auto& r : rows) m = std::min(m, r.overlap);
  return m;
}

double TruthTableReport::max_phase_error() const {
  double m = 0.0;
  for (const auto& r : rows) {
    if (r.phase_error) m = std::max(m, *r.phase_error);
  }
  return m;
}

double TruthTableReport::max_leakage() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.leakage);
  return m;
}

double TruthTableReport::max_excited_population() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.excited_population);
  return m;
}

bool TruthTableReport::matches(double overlap_threshold, double phase_tolerance_deg) const {
  for (const auto& r : rows) {
    if (!(r.overlap >= overlap_threshold)) return false;
    if (r.phase_error && !(*r.phase_error <= phase_tolerance_deg)) return false;
  }
  return rows.size() == 8;
}

TruthTableReport truth_table(const LogicalPair& pair, const DeviceModel& model,
                             const GateSchedule& schedule, const CompositeSpace& space) {
  TruthTableReport report;
  report.engine = schedule.engine;
  report.gate_time = schedule.gate_time;
  for (int l = 0; l < 8; ++l) {
    TruthTableRow row;
    row.l1 = l >> 2 & 1;
    row.l2 = l >> 1 & 1;
    row.l3 = l & 1;
    row.label = row_label(row.l1, row.l2, row.l3);
    row.target_phase = (row.l1 && row.l2 && row.l3) ? -1 : 1;
    const StateVector input = logical_basis_state(pair, space, row.l1, row.l2, row.l3);
    const StateVector target = input.scaled(static_cast<double>(row.target_phase));
    const EvolutionResult out = run_engine(input, model, schedule);
    if (!out.ok) throw NumericalError(std::string(to_string(schedule.engine)) + " " + row.label + ": " + out.failure);
    if (out.rho) {
      row.overlap = fidelity(*out.rho, target);
      row.leakage = logical_leakage(pair, *out.rho);
      row.excited_population = level_population(*out.rho, Level::E) + level_population(*out.rho, Level::F);
    } else {
      const StateVector& psi = *out.psi;
      const cplx against_target = target.inner(psi);
      row.overlap = std::min(1.0, std::abs(against_target));
      if (row.overlap >= kPhaseOverlapFloor) {
        row.phase = std::arg(input.inner(psi));
        row.phase_error = std::abs(std::arg(against_target)) * 180.0 / std::numbers::pi;
      }
      row.leakage = logical_leakage(pair, psi);
      row.excited_population = level_population(psi, Level::E) + level_population(psi, Level::F);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<LogicalProduct> haar_logical_inputs(int count, std::uint64_t seed) {
  if (count < 1) throw NumericalError("sample count must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto qubit = [&]() {
    // Uniform on the Bloch sphere: cos(theta) uniform in [-1, 1].
    const double cos_theta = 2.0 * unit(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const double c = std::sqrt(0.5 * (1.0 + cos_theta));
    const double s = std::sqrt(0.5 * (1.0 - cos_theta));
    return std::array<cplx, 2>{cplx(c), std::polar(s, phi)};
  };
  std::vector<LogicalProduct> out(static_cast<std::size_t>(count));
  for (auto& p : out) {
    p.q1 = qubit();
    p.q2 = qubit();
    p.q3 = qubit();
  }
  return out;
}

double average_gate_fidelity(const LogicalPair& pair, const DeviceModel& model,
                             const GateSchedule& schedule, const CompositeSpace& space,
                             const std::vector<LogicalProduct>& inputs) {
  if (inputs.empty()) throw NumericalError("sample count must be at least 1");
  double sum = 0.0;
  for (const auto& a : inputs) {
    const StateVector input = logical_product_state(pair, space, a);
    const StateVector target = ideal_ccz_output(pair, space, a);
    const EvolutionResult out = run_engine(input, model, schedule);
    if (!out.ok) throw NumericalError(std::string(to_string(schedule.engine)) + ": " + out.failure);
    sum += out.rho ? fidelity(*out.rho, target) : fidelity(*out.psi, target);
  }
  return sum / static_cast<double>(inputs.size());
}

double average_gate_fidelity(const LogicalPair& pair, const DeviceModel& model,
                             const GateSchedule& schedule, const CompositeSpace& space,
                             int sample_count, std::uint64_t seed) {
  return average_gate_fidelity(pair, model, schedule, space, haar_logical_inputs(sample_count, seed));
}

}  // namespace ccz
