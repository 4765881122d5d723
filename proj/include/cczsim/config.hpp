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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "cczsim/device.hpp"
#include "cczsim/encodings.hpp"
#include "cczsim/lindblad.hpp"
#include "cczsim/operator.hpp"

namespace ccz {

// Flat key = value run description in presentation units: frequencies and
// couplings as value / 2 pi in GHz or MHz, lifetimes in microseconds.
// Optional entries read "auto"; lifetimes accept "inf" (no decay).
struct RunConfig {
  double omega_gg_prime_ghz = 1.0;
  double omega_eg_ghz = 7.0;
  double omega_eg_prime_ghz = 8.0;
  double omega_fe_ghz = 12.0;
  double omega_fg_ghz = 19.0;
  double omega_c1_ghz = 18.3;
  double omega_c2_ghz = 11.2;

  double g1_mhz = 95.7;
  std::optional<double> g2_mhz;  // auto: closes the gate for k
  std::optional<double> g1_prime_mhz;
  std::optional<double> g1_double_prime_mhz;
  std::optional<double> g1_triple_prime_mhz;
  std::optional<double> g2_prime_mhz;
  std::optional<double> g2_double_prime_mhz;
  std::optional<double> g2_triple_prime_mhz;
  double g12_ratio = 0.0;  // g12 / g_max
  int k = 5;

  double kappa_inv_us = 10.0;
  double gamma_gg_prime_inv_us = 80.0;
  double gamma_eg_inv_us = 40.0;
  double gamma_eg_prime_inv_us = 20.0;
  double gamma_fg_prime_inv_us = 10.0;
  double gamma_fg_inv_us = 10.0;
  double gamma_fe_inv_us = 10.0;
  double gamma_f_phi_inv_us = 5.0;
  double gamma_e_phi_inv_us = 5.0;
  double gamma_g_phi_inv_us = 5.0;

  double alpha = 0.5;
  int n_trunc_1 = 6;
  int n_trunc_2 = 6;

  std::optional<double> gate_time_us;  // auto: pi / chi
  std::optional<double> step_ps;       // auto: 1 / (steps_per_period f_max)
  double steps_per_period = 40.0;
  double closed_steps_per_period = 240.0;
  int hermitize_every = 100;
  int diagnostic_every = 5000;
  double trace_tol = 1e-6;
  double hermiticity_tol = 1e-8;
  double negativity_floor = -1e-6;

  std::uint64_t seed = 1;
  int samples = 20;
  int workers = 1;

  DeviceModel to_model() const;
  CompositeSpace space() const;
  IntegratorConfig integrator() const;
  CatSpec cat_spec() const;
};

// Throws ConfigError with the offending line number.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_string(std::string_view text);
RunConfig load_config(const std::string& path);

// Every key, %.17g numbers; parse_config(dump) reproduces the config.
std::string dump_config(const RunConfig& config);

// Sets one key from its text form; line is used in error messages.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value, int line = 0);

}  // namespace ccz
