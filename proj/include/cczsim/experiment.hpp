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

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cczsim/config.hpp"
#include "cczsim/gate.hpp"

namespace ccz {

// Human-readable derived-parameter report in presentation units.
std::string params_report(const DeviceModel& model, const RunConfig& config);

struct TableCheck {
  std::string name;
  double value = 0.0;      // presentation units
  double reference = 0.0;  // reference table entry
  double relative_error = 0.0;
  double tolerance = 0.0;
  bool ok() const { return relative_error <= tolerance; }
};

// Detunings (0.5%) and g2 (0.5%) against the reference parameter table.
std::vector<TableCheck> check_table1(const DeviceModel& model, double tolerance = 0.005);

// (|cat>|cat> + |cat-bar>|cat-bar>)/sqrt2 (x) |+>, |+> = (|g'> + |g>)/sqrt2.
StateVector ghz_initial_state(const LogicalPair& pair, const CompositeSpace& space);
// (|cat>|cat>|+> + |cat-bar>|cat-bar>|->)/sqrt2, |-> = (|g'> - |g>)/sqrt2.
StateVector ghz_target_state(const LogicalPair& pair, const CompositeSpace& space);

struct GhzResult {
  bool ok = true;
  std::string failure;
  double fidelity = 0.0;
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
  double gate_time = 0.0;
  double step = 0.0;
  long steps = 0;
  double runtime_s = 0.0;
};

// GHZ generation with the config's kappa_inv_us and g12_ratio.
GhzResult run_ghz(const RunConfig& config, Engine engine = Engine::FullLossy);

struct SweepSpec {
  std::vector<double> kappa_inv_us;
  std::vector<double> g12_ratios;

  void validate() const;
};

struct SweepRow {
  double kappa_inv_us = 0.0;
  double g12_over_gmax = 0.0;
  GhzResult result;
  std::string status;  // "ok" or the failure reason
};

using SweepProgress = std::function<void(const SweepRow&)>;

// One GHZ run per grid point on up to config.workers threads. Rows come
// back ratio-major, kappa-minor, whatever the completion order.
std::vector<SweepRow> run_sweep(const RunConfig& config, const SweepSpec& spec,
                                const SweepProgress& progress = {});

// Header plus one line per row. With timing off, runtime_s is written as 0
// so identical runs give identical bytes.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool timing = true);
std::string sweep_svg(const std::vector<SweepRow>& rows);

struct ValidationCase {
  std::string state;
  double infidelity = 0.0;  // 1 - |<psi_kerr|psi_rwa>|
};

struct ValidationReport {
  double scale = 1.0;
  double gate_time = 0.0;
  double g1_over_delta1 = 0.0;
  std::vector<ValidationCase> cases;

  double worst() const;
};

// Wanted couplings scaled by the factor, gate time pi / chi of the scaled
// set; the RWA Hamiltonian against the cross-Kerr form.
ValidationReport validate_effective(const RunConfig& config, double scale);

// Comma-separated numbers; throws ConfigError.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace ccz
