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

#include <limits>

#include "cczsim/units.hpp"

namespace ccz {

// Ququart transition and cavity angular frequencies.
struct DeviceFrequencies {
  double omega_gg_prime = 0.0;
  double omega_eg = 0.0;
  double omega_eg_prime = 0.0;
  double omega_fe = 0.0;
  double omega_fg = 0.0;
  double omega_c1 = 0.0;
  double omega_c2 = 0.0;

  static DeviceFrequencies table1();
  // Level ladder: omega_fg = omega_fe + omega_eg, omega_eg' = omega_eg + omega_gg'.
  double ladder_error() const;
};

struct Detunings {
  double delta1 = 0.0;      // omega_fg - omega_c1
  double delta2 = 0.0;      // omega_fe - omega_c2
  double delta1_p = 0.0;    // omega_fe - omega_c1
  double delta2_p = 0.0;    // omega_fg - omega_c2
  double delta1_pp = 0.0;   // omega_eg - omega_c1
  double delta2_pp = 0.0;   // omega_eg - omega_c2
  double delta1_ppp = 0.0;  // omega_eg' - omega_c1
  double delta2_ppp = 0.0;  // omega_eg' - omega_c2
  double Delta = 0.0;       // delta2 - delta1
  double Delta12 = 0.0;     // omega_c1 - omega_c2
};

struct CouplingSet {
  double g1 = 0.0;
  double g2 = 0.0;
  double g1_p = 0.0;    // cavity 1 on |e> <-> |f>
  double g1_pp = 0.0;   // cavity 1 on |g> <-> |e>
  double g1_ppp = 0.0;  // cavity 1 on |g'> <-> |e>
  double g2_p = 0.0;    // cavity 2 on |g> <-> |f>
  double g2_pp = 0.0;   // cavity 2 on |g> <-> |e>
  double g2_ppp = 0.0;  // cavity 2 on |g'> <-> |e>
  double g12 = 0.0;     // cavity-cavity crosstalk

  // g' = g, g'' = 0.1 g, g''' = g / sqrt(2) for both cavities.
  static CouplingSet with_dipole_ratios(double g1, double g2, double g12 = 0.0);
  // Largest of the atom-cavity couplings (crosstalk excluded).
  double g_max() const;
  bool has_unwanted() const;
  // Every coupling multiplied by the factor.
  CouplingSet scaled(double factor) const;
  CouplingSet wanted_only() const;
};

struct DecoherenceRates {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double gamma_fe = 0.0;
  double gamma_fg = 0.0;
  double gamma_fg_prime = 0.0;
  double gamma_eg = 0.0;
  double gamma_eg_prime = 0.0;
  double gamma_gg_prime = 0.0;
  double gamma_f_phi = 0.0;
  double gamma_e_phi = 0.0;
  double gamma_g_phi = 0.0;

  // Cavity lifetime kappa^-1 in microseconds, ququart rates from the
  // reference parameter set.
  static DecoherenceRates reference(double kappa_inv_us);
  bool all_zero() const;
};

struct DispersiveRatios {
  double g1_over_delta1 = 0.0;
  double g2_over_delta2 = 0.0;
  double lambda_over_Delta = 0.0;
  double lambda1_over_Delta = 0.0;
  double lambda2_over_Delta = 0.0;
};

struct DerivedCouplings {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda = 0.0;
  double chi = 0.0;
  double eta = 0.0;
  double gate_time = 0.0;  // pi / chi
  int k = 0;               // requested closure integer
  int s = 0;               // round(eta t / 2 pi)
  double lambda1_t_over_pi = 0.0;
  double eta_t_over_pi = 0.0;
  double q1 = std::numeric_limits<double>::infinity();
  double q2 = std::numeric_limits<double>::infinity();
  DispersiveRatios ratios;

  // |lambda1 t / pi - (2k + 1)| / (2k + 1)
  double closure_error() const;
};

// Throws RegimeError unless delta1 > 0, delta2 > 0 and Delta > 0.
Detunings detunings(const DeviceFrequencies& freqs);

// Throws NoGateError when chi vanishes.
DerivedCouplings derived_couplings(const DeviceFrequencies& freqs, const CouplingSet& couplings,
                                   const DecoherenceRates& rates, int k);

// g2 that closes the gate for the given k: chi t = pi and lambda1 t = (2k+1) pi.
double required_g2(double delta1, double delta2, int k);

// Validated parameter record.
class DeviceModel {
 public:
  DeviceModel(DeviceFrequencies freqs, CouplingSet couplings, DecoherenceRates rates, int k);

  const DeviceFrequencies& frequencies() const noexcept { return freqs_; }
  const CouplingSet& couplings() const noexcept { return couplings_; }
  const DecoherenceRates& rates() const noexcept { return rates_; }
  const Detunings& detuning() const noexcept { return detunings_; }
  const DerivedCouplings& derived() const noexcept { return derived_; }
  int k() const noexcept { return k_; }

  DeviceModel with_couplings(const CouplingSet& couplings) const;
  DeviceModel with_rates(const DecoherenceRates& rates) const;

 private:
  DeviceFrequencies freqs_;
  CouplingSet couplings_;
  DecoherenceRates rates_;
  int k_;
  Detunings detunings_;
  DerivedCouplings derived_;
};

// Reference device: reference frequencies, g1 = 2 pi x 95.7 MHz, g2 from
// required_g2 with k = 5, dipole-ratio unwanted couplings.
DeviceModel reference_model(double kappa_inv_us = 10.0, double g12_ratio = 0.0);

}  // namespace ccz
