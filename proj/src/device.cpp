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

#include "cczsim/device.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <string>

#include "cczsim/error.hpp"

namespace ccz {

namespace {

std::string ghz_str(double angular) {
  std::ostringstream os;
  os << to_ghz(angular) << " GHz";
  return os.str();
}

}  // namespace

DeviceFrequencies DeviceFrequencies::table1() {
  DeviceFrequencies f;
  f.omega_gg_prime = ghz(1.0);
  f.omega_eg = ghz(7.0);
  f.omega_eg_prime = ghz(8.0);
  f.omega_fe = ghz(12.0);
  f.omega_fg = ghz(19.0);
  f.omega_c1 = ghz(18.3);
  f.omega_c2 = ghz(11.2);
  return f;
}

double DeviceFrequencies::ladder_error() const {
  const double scale = std::max({std::abs(omega_fg), std::abs(omega_eg_prime), 1.0});
  const double e1 = std::abs(omega_fg - (omega_fe + omega_eg));
  const double e2 = std::abs(omega_eg_prime - (omega_eg + omega_gg_prime));
  return std::max(e1, e2) / scale;
}

CouplingSet CouplingSet::with_dipole_ratios(double g1, double g2, double g12) {
  CouplingSet c;
  c.g1 = g1;
  c.g2 = g2;
  c.g1_p = g1;
  c.g1_pp = 0.1 * g1;
  c.g1_ppp = g1 / std::numbers::sqrt2;
  c.g2_p = g2;
  c.g2_pp = 0.1 * g2;
  c.g2_ppp = g2 / std::numbers::sqrt2;
  c.g12 = g12;
  return c;
}

double CouplingSet::g_max() const {
  return std::max({g1, g2, g1_p, g1_pp, g1_ppp, g2_p, g2_pp, g2_ppp});
}

bool CouplingSet::has_unwanted() const {
  return g1_p != 0.0 || g1_pp != 0.0 || g1_ppp != 0.0 || g2_p != 0.0 || g2_pp != 0.0 ||
         g2_ppp != 0.0 || g12 != 0.0;
}

CouplingSet CouplingSet::scaled(double factor) const {
  CouplingSet c = *this;
  for (double* g : {&c.g1, &c.g2, &c.g1_p, &c.g1_pp, &c.g1_ppp, &c.g2_p, &c.g2_pp, &c.g2_ppp,
                    &c.g12}) {
    *g *= factor;
  }
  return c;
}

CouplingSet CouplingSet::wanted_only() const {
  CouplingSet c;
  c.g1 = g1;
  c.g2 = g2;
  return c;
}

DecoherenceRates DecoherenceRates::reference(double kappa_inv_us) {
  DecoherenceRates r;
  r.kappa1 = rate_from_lifetime_us(kappa_inv_us);
  r.kappa2 = r.kappa1;
  r.gamma_gg_prime = rate_from_lifetime_us(80.0);
  r.gamma_eg = rate_from_lifetime_us(40.0);
  r.gamma_fg_prime = rate_from_lifetime_us(10.0);
  r.gamma_fg = rate_from_lifetime_us(10.0);
  r.gamma_fe = rate_from_lifetime_us(10.0);
  r.gamma_eg_prime = rate_from_lifetime_us(20.0);
  r.gamma_f_phi = rate_from_lifetime_us(5.0);
  r.gamma_e_phi = rate_from_lifetime_us(5.0);
  r.gamma_g_phi = rate_from_lifetime_us(5.0);
  return r;
}

bool DecoherenceRates::all_zero() const {
  for (double r : {kappa1, kappa2, gamma_fe, gamma_fg, gamma_fg_prime, gamma_eg, gamma_eg_prime,
                   gamma_gg_prime, gamma_f_phi, gamma_e_phi, gamma_g_phi}) {
    if (r != 0.0) return false;
  }
  return true;
}

double DerivedCouplings::closure_error() const {
  const double target = 2.0 * k + 1.0;
  return std::abs(lambda1_t_over_pi - target) / target;
}

Detunings detunings(const DeviceFrequencies& f) {
  for (double w : {f.omega_gg_prime, f.omega_eg, f.omega_eg_prime, f.omega_fe, f.omega_fg,
                   f.omega_c1, f.omega_c2}) {
    if (!(w > 0.0)) throw RegimeError("all frequencies must be positive");
  }
  Detunings d;
  d.delta1 = f.omega_fg - f.omega_c1;
  d.delta2 = f.omega_fe - f.omega_c2;
  d.delta1_p = f.omega_fe - f.omega_c1;
  d.delta2_p = f.omega_fg - f.omega_c2;
  d.delta1_pp = f.omega_eg - f.omega_c1;
  d.delta2_pp = f.omega_eg - f.omega_c2;
  d.delta1_ppp = f.omega_eg_prime - f.omega_c1;
  d.delta2_ppp = f.omega_eg_prime - f.omega_c2;
  d.Delta = d.delta2 - d.delta1;
  d.Delta12 = f.omega_c1 - f.omega_c2;
  if (!(d.delta1 > 0.0)) {
    throw RegimeError("delta1 = omega_fg - omega_c1 > 0 violated (delta1 = " + ghz_str(d.delta1) + ")");
  }
  if (!(d.delta2 > 0.0)) {
    throw RegimeError("delta2 = omega_fe - omega_c2 > 0 violated (delta2 = " + ghz_str(d.delta2) + ")");
  }
  if (!(d.Delta > 0.0)) {
    throw RegimeError("Delta = delta2 - delta1 > 0 violated (Delta = " + ghz_str(d.Delta) + ")");
  }
  return d;
}

DerivedCouplings derived_couplings(const DeviceFrequencies& freqs, const CouplingSet& c,
                                   const DecoherenceRates& rates, int k) {
  const Detunings d = detunings(freqs);
  DerivedCouplings out;
  out.k = k;
  out.lambda1 = c.g1 * c.g1 / d.delta1;
  out.lambda2 = c.g2 * c.g2 / d.delta2;
  out.lambda = 0.5 * c.g1 * c.g2 * (1.0 / d.delta1 + 1.0 / d.delta2);
  out.chi = out.lambda * out.lambda / d.Delta;
  out.eta = -out.lambda1 + out.chi;
  out.ratios.g1_over_delta1 = c.g1 / d.delta1;
  out.ratios.g2_over_delta2 = c.g2 / d.delta2;
  out.ratios.lambda_over_Delta = out.lambda / d.Delta;
  out.ratios.lambda1_over_Delta = out.lambda1 / d.Delta;
  out.ratios.lambda2_over_Delta = out.lambda2 / d.Delta;
  if (rates.kappa1 > 0.0) out.q1 = freqs.omega_c1 / rates.kappa1;
  if (rates.kappa2 > 0.0) out.q2 = freqs.omega_c2 / rates.kappa2;
  if (out.chi == 0.0) {
    throw NoGateError("cross-Kerr rate chi vanishes; no gate time exists");
  }
  out.gate_time = std::numbers::pi / out.chi;
  out.lambda1_t_over_pi = out.lambda1 * out.gate_time / std::numbers::pi;
  out.eta_t_over_pi = out.eta * out.gate_time / std::numbers::pi;
  out.s = static_cast<int>(std::lround(out.eta_t_over_pi / 2.0));
  return out;
}

double required_g2(double delta1, double delta2, int k) {
  if (!(delta1 > 0.0) || !(delta2 > 0.0)) {
    throw RegimeError("required_g2 needs delta1 > 0 and delta2 > 0");
  }
  if (!(delta2 > delta1)) {
    throw RegimeError("required_g2 needs delta2 > delta1 (Delta > 0)");
  }
  if (k < 0) throw RegimeError("closure integer k must be non-negative");
  const double Delta = delta2 - delta1;
  return (2.0 * delta2 / (delta1 + delta2)) * std::sqrt(Delta * delta1 / (2.0 * k + 1.0));
}

DeviceModel::DeviceModel(DeviceFrequencies freqs, CouplingSet couplings, DecoherenceRates rates,
                         int k)
    : freqs_(freqs), couplings_(couplings), rates_(rates), k_(k) {
  if (freqs_.ladder_error() > 1e-9) {
    throw RegimeError("level ladder inconsistent: need omega_fg = omega_fe + omega_eg and "
                      "omega_eg' = omega_eg + omega_gg'");
  }
  for (double g : {couplings_.g1, couplings_.g2, couplings_.g1_p, couplings_.g1_pp,
                   couplings_.g1_ppp, couplings_.g2_p, couplings_.g2_pp, couplings_.g2_ppp,
                   couplings_.g12}) {
    if (!(g >= 0.0)) throw RegimeError("coupling constants must be non-negative");
  }
  if (couplings_.g12 > couplings_.g_max() * (1.0 + 1e-12)) {
    throw RegimeError("crosstalk g12 exceeds g_max");
  }
  for (double r : {rates_.kappa1, rates_.kappa2, rates_.gamma_fe, rates_.gamma_fg,
                   rates_.gamma_fg_prime, rates_.gamma_eg, rates_.gamma_eg_prime,
                   rates_.gamma_gg_prime, rates_.gamma_f_phi, rates_.gamma_e_phi,
                   rates_.gamma_g_phi}) {
    if (!(r >= 0.0)) throw RegimeError("decoherence rates must be non-negative");
  }
  if (k_ < 0) throw RegimeError("closure integer k must be non-negative");
  detunings_ = detunings(freqs_);
  derived_ = derived_couplings(freqs_, couplings_, rates_, k_);
}

DeviceModel DeviceModel::with_couplings(const CouplingSet& couplings) const {
  return DeviceModel(freqs_, couplings, rates_, k_);
}

DeviceModel DeviceModel::with_rates(const DecoherenceRates& rates) const {
  return DeviceModel(freqs_, couplings_, rates, k_);
}

DeviceModel reference_model(double kappa_inv_us, double g12_ratio) {
  const DeviceFrequencies f = DeviceFrequencies::table1();
  const Detunings d = detunings(f);
  const int k = 5;
  const double g1 = mhz(95.7);
  const double g2 = required_g2(d.delta1, d.delta2, k);
  CouplingSet c = CouplingSet::with_dipole_ratios(g1, g2);
  c.g12 = g12_ratio * c.g_max();
  return DeviceModel(f, c, DecoherenceRates::reference(kappa_inv_us), k);
}

}  // namespace ccz
