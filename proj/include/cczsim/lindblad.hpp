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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cczsim/device.hpp"
#include "cczsim/hamiltonian.hpp"
#include "cczsim/kernels/kernels.hpp"
#include "cczsim/operator.hpp"

namespace ccz {

struct CollapseChannel {
  std::string name;
  Operator op;
  double rate;
};

struct LindbladModel {
  Hamiltonian hamiltonian;
  std::vector<CollapseChannel> channels;

  const CompositeSpace& space() const noexcept { return hamiltonian.space(); }
  double total_rate() const;
  // Throws SpaceMismatch / NumericalError on inconsistent channels.
  void validate() const;
};

// Cavity decay, the six ququart relaxation paths and the three projector
// dephasing channels. Channels with zero rate are omitted.
std::vector<CollapseChannel> decoherence_channels(const CompositeSpace& space,
                                                  const DecoherenceRates& rates);

struct IntegratorConfig {
  double final_time = 0.0;
  // Fixed RK4 step; 0 selects 1 / (steps_per_period * f_max).
  double step = 0.0;
  double steps_per_period = 40.0;
  // Closed runs are cheap and held to the tighter norm tolerance.
  double closed_steps_per_period = 240.0;
  int diagnostic_every = 5000;
  int hermitize_every = 100;
  double trace_tol = 1e-6;
  double hermiticity_tol = 1e-8;
  double negativity_floor = -1e-6;
  double norm_tol = 1e-8;
};

// Largest frequency (Hz, not rad/s) the integrator has to resolve: the
// largest of |detuning|, the Hamiltonian norm bound and the total decay rate.
double fastest_frequency(const Hamiltonian& h, double total_rate = 0.0);
double automatic_step(const Hamiltonian& h, double total_rate, double steps_per_period);

struct DiagnosticPoint {
  double time = 0.0;
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;  // open runs only
  double norm_error = 0.0;      // closed runs only
  FockLeakage leakage;
};

struct EvolutionResult {
  bool ok = true;
  std::string failure;
  std::optional<DensityMatrix> rho;
  std::optional<StateVector> psi;
  std::vector<DiagnosticPoint> timeline;
  double step = 0.0;
  long steps = 0;
  double wall_seconds = 0.0;

  double max_trace_error() const;
  double max_hermiticity_error() const;
  double lowest_eigenvalue() const;
  double max_norm_error() const;
  FockLeakage max_leakage() const;
};

// d rho / dt = -i [H(t), rho] + sum_k rate_k D[L_k] rho, evaluated with
// general (not Hermitian-assuming) sparse-dense products.
DenseMatrix liouvillian_apply(const DensityMatrix& rho, double t, const LindbladModel& model);

// Precomputed right-hand side for Hermitian rho. Uses
// -i(K rho - rho K^dag) = X + X^dag with X = -i K rho, K = H - (i/2) sum L^dag L.
class LiouvillianKernel {
 public:
  explicit LiouvillianKernel(const LindbladModel& model,
                             const kernels::KernelTable& table = kernels::active());
  ~LiouvillianKernel();
  LiouvillianKernel(LiouvillianKernel&&) noexcept;
  LiouvillianKernel& operator=(LiouvillianKernel&&) noexcept;

  int dimension() const noexcept;
  // out = L(t) rho for Hermitian rho (row-major d x d).
  void apply(double t, const cplx* rho, cplx* out);
  DenseMatrix apply(double t, const DensityMatrix& rho);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Fixed-step RK4 on the master equation; failed results keep the timeline.
EvolutionResult evolve_master(const DensityMatrix& rho0, const LindbladModel& model,
                              const IntegratorConfig& cfg);

// Fixed-step RK4 on i d psi / dt = H(t) psi.
EvolutionResult evolve_schrodinger(const StateVector& psi0, const Hamiltonian& h,
                                   const IntegratorConfig& cfg);

// sqrt(<target| rho |target>), clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const StateVector& target);
// |<target|psi>|, the pure-state case of the same definition.
double fidelity(const StateVector& psi, const StateVector& target);

}  // namespace ccz
