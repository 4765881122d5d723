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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cczsim/device.hpp"
#include "cczsim/encodings.hpp"
#include "cczsim/lindblad.hpp"
#include "cczsim/operator.hpp"

namespace ccz {

enum class Engine {
  IdealDiagonal,  // closed-form phase table
  Eff6,           // eta n1 Pg + chi n1 n2 Pg
  Eff5,           // static cross-Kerr form
  Eff4,           // exchange form
  Rwa,            // wanted couplings only, resonant-frame RWA Hamiltonian
  FullClosed,
  FullLossy,
};

// Accepts ideal, eff6, eff5, eff4, rwa, full, lossy (and the long names).
Engine parse_engine(std::string_view name);
std::string_view to_string(Engine engine);
bool is_open(Engine engine) noexcept;

struct GateSchedule {
  double gate_time = 0.0;
  int k = 0;
  int s = 0;
  Engine engine = Engine::IdealDiagonal;
  IntegratorConfig integrator;

  // t = pi / chi with k and s taken from the derived couplings.
  static GateSchedule from_model(const DeviceModel& model, Engine engine);
  // max(|chi t - pi|, |eta t - 2 s pi|) / pi
  double closure_error(const DeviceModel& model) const;
};

// exp(-i (eta n1 + chi n1 n2) t) on g, 1 on g'. Throws LogicalSpaceError for e, f.
cplx phase_factor(int n1, int n2, Level level, double eta, double chi, double t);

class PhaseTable {
 public:
  PhaseTable(const CompositeSpace& space, double eta, double chi, double t);

  cplx at(int n1, int n2, Level level) const;
  const CompositeSpace& space() const noexcept { return space_; }
  // Largest ||A| - 1| over the table.
  double modulus_error() const;

 private:
  CompositeSpace space_;
  std::vector<cplx> g_prime_;
  std::vector<cplx> g_;
};

// Diagonal; phase factors on g and g', identity on e and f.
Operator ideal_gate_unitary(const CompositeSpace& space, double eta, double chi, double t);

// Bit l of a logical label picks even (0) or odd (1) for the cavities and
// g' (0) or g (1) for the ququart.
StateVector logical_basis_state(const LogicalPair& pair, const CompositeSpace& space, int l1, int l2,
                                int l3);

// Single-qubit amplitudes for each of the three logical qubits.
struct LogicalProduct {
  std::array<cplx, 2> q1{1.0, 0.0};
  std::array<cplx, 2> q2{1.0, 0.0};
  std::array<cplx, 2> q3{1.0, 0.0};
};

StateVector logical_product_state(const LogicalPair& pair, const CompositeSpace& space,
                                  const LogicalProduct& amplitudes);
// CCZ applied at the logical level: -1 on the (odd, odd, g) component.
StateVector ideal_ccz_output(const LogicalPair& pair, const CompositeSpace& space,
                             const LogicalProduct& amplitudes);

// Evolve one input for the schedule's gate time under its engine. Closed
// engines fill psi, the lossy engine fills rho. Failures are reported in
// the result, not thrown.
EvolutionResult run_engine(const StateVector& input, const DeviceModel& model,
                           const GateSchedule& schedule);

// Population outside span of the eight logical basis states.
double logical_leakage(const LogicalPair& pair, const StateVector& psi);
double logical_leakage(const LogicalPair& pair, const DensityMatrix& rho);

struct TruthTableRow {
  std::string label;
  int l1 = 0;
  int l2 = 0;
  int l3 = 0;
  int target_phase = 1;
  double overlap = 0.0;                // |<target|out>|, or the fidelity for open engines
  std::optional<double> phase;         // arg <input|out> in radians
  std::optional<double> phase_error;   // |arg <target|out>| in degrees
  double leakage = 0.0;                // out of the logical subspace
  double excited_population = 0.0;     // ququart e + f
};

struct TruthTableReport {
  Engine engine = Engine::IdealDiagonal;
  double gate_time = 0.0;
  std::vector<TruthTableRow> rows;

  double min_overlap() const;
  double max_phase_error() const;
  double max_leakage() const;
  double max_excited_population() const;
  // The target sign pattern is reproduced: every overlap above the
  // threshold and every defined phase error below the tolerance (degrees).
  bool matches(double overlap_threshold, double phase_tolerance_deg) const;
};

// Phases below this overlap magnitude are reported as undefined.
inline constexpr double kPhaseOverlapFloor = 1e-6;

// Throws NumericalError when an engine run fails its diagnostics.
TruthTableReport truth_table(const LogicalPair& pair, const DeviceModel& model,
                             const GateSchedule& schedule, const CompositeSpace& space);

// Mean fidelity between evolved and ideal CCZ outputs over Haar-random
// logical product inputs; deterministic for a given seed.
double average_gate_fidelity(const LogicalPair& pair, const DeviceModel& model,
                             const GateSchedule& schedule, const CompositeSpace& space,
                             int sample_count, std::uint64_t seed);
double average_gate_fidelity(const LogicalPair& pair, const DeviceModel& model,
                             const GateSchedule& schedule, const CompositeSpace& space,
                             const std::vector<LogicalProduct>& inputs);

// Haar-random single-qubit amplitudes for three qubits.
std::vector<LogicalProduct> haar_logical_inputs(int count, std::uint64_t seed);

}  // namespace ccz
