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

#include "cczsim/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <type_traits>
#include <sstream>
#include <variant>
#include <vector>

#include "cczsim/error.hpp"
#include "cczsim/units.hpp"

namespace ccz {

namespace {

using Field = std::variant<double RunConfig::*, std::optional<double> RunConfig::*, int RunConfig::*,
                           std::uint64_t RunConfig::*>;

struct Key {
  std::string_view name;
  Field field;
};

const std::vector<Key>& keys() {
  static const std::vector<Key> table{
      {"omega_gg_prime_ghz", &RunConfig::omega_gg_prime_ghz},
      {"omega_eg_ghz", &RunConfig::omega_eg_ghz},
      {"omega_eg_prime_ghz", &RunConfig::omega_eg_prime_ghz},
      {"omega_fe_ghz", &RunConfig::omega_fe_ghz},
      {"omega_fg_ghz", &RunConfig::omega_fg_ghz},
      {"omega_c1_ghz", &RunConfig::omega_c1_ghz},
      {"omega_c2_ghz", &RunConfig::omega_c2_ghz},
      {"g1_mhz", &RunConfig::g1_mhz},
      {"g2_mhz", &RunConfig::g2_mhz},
      {"g1_prime_mhz", &RunConfig::g1_prime_mhz},
      {"g1_double_prime_mhz", &RunConfig::g1_double_prime_mhz},
      {"g1_triple_prime_mhz", &RunConfig::g1_triple_prime_mhz},
      {"g2_prime_mhz", &RunConfig::g2_prime_mhz},
      {"g2_double_prime_mhz", &RunConfig::g2_double_prime_mhz},
      {"g2_triple_prime_mhz", &RunConfig::g2_triple_prime_mhz},
      {"g12_ratio", &RunConfig::g12_ratio},
      {"k", &RunConfig::k},
      {"kappa_inv_us", &RunConfig::kappa_inv_us},
      {"gamma_gg_prime_inv_us", &RunConfig::gamma_gg_prime_inv_us},
      {"gamma_eg_inv_us", &RunConfig::gamma_eg_inv_us},
      {"gamma_eg_prime_inv_us", &RunConfig::gamma_eg_prime_inv_us},
      {"gamma_fg_prime_inv_us", &RunConfig::gamma_fg_prime_inv_us},
      {"gamma_fg_inv_us", &RunConfig::gamma_fg_inv_us},
      {"gamma_fe_inv_us", &RunConfig::gamma_fe_inv_us},
      {"gamma_f_phi_inv_us", &RunConfig::gamma_f_phi_inv_us},
      {"gamma_e_phi_inv_us", &RunConfig::gamma_e_phi_inv_us},
      {"gamma_g_phi_inv_us", &RunConfig::gamma_g_phi_inv_us},
      {"alpha", &RunConfig::alpha},
      {"n_trunc_1", &RunConfig::n_trunc_1},
      {"n_trunc_2", &RunConfig::n_trunc_2},
      {"gate_time_us", &RunConfig::gate_time_us},
      {"step_ps", &RunConfig::step_ps},
      {"steps_per_period", &RunConfig::steps_per_period},
      {"closed_steps_per_period", &RunConfig::closed_steps_per_period},
      {"hermitize_every", &RunConfig::hermitize_every},
      {"diagnostic_every", &RunConfig::diagnostic_every},
      {"trace_tol", &RunConfig::trace_tol},
      {"hermiticity_tol", &RunConfig::hermiticity_tol},
      {"negativity_floor", &RunConfig::negativity_floor},
      {"seed", &RunConfig::seed},
      {"samples", &RunConfig::samples},
      {"workers", &RunConfig::workers},
  };
  return table;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text, int line) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError(std::string(key) + ": '" + std::string(text) + "' is not a number", line);
  }
  return v;
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view text, int line) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(std::string(key) + ": '" + std::string(text) + "' is not an integer", line);
  }
  return v;
}

std::string format_double(double v) {
  if (std::isinf(v)) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double lifetime_rate(const char* name, double lifetime_us) {
  if (!(lifetime_us > 0.0)) throw ConfigError(std::string(name) + " must be positive");
  return rate_from_lifetime_us(lifetime_us);
}

}  // namespace

void set_config_value(RunConfig& config, std::string_view key, std::string_view value, int line) {
  for (const auto& k : keys()) {
    if (k.name != key) continue;
    std::visit(
        [&](auto member) {
          using T = std::remove_cvref_t<decltype(config.*member)>;
          if constexpr (std::is_same_v<T, double>) {
            config.*member = parse_double(key, value, line);
          } else if constexpr (std::is_same_v<T, std::optional<double>>) {
            if (value == "auto") {
              config.*member = std::nullopt;
            } else {
              config.*member = parse_double(key, value, line);
            }
          } else {
            config.*member = parse_integer<T>(key, value, line);
          }
        },
        k.field);
    return;
  }
  throw ConfigError("unknown key '" + std::string(key) + "'", line);
}

RunConfig parse_config(std::istream& in) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line);
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key", line);
    if (value.empty()) throw ConfigError(std::string(key) + ": missing value", line);
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError("duplicate key '" + std::string(key) + "'", line);
    }
    set_config_value(config, key, value, line);
  }
  return config;
}

RunConfig parse_config_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_config(in);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

std::string dump_config(const RunConfig& config) {
  std::ostringstream os;
  for (const auto& k : keys()) {
    os << k.name << " = ";
    std::visit(
        [&](auto member) {
          using T = std::remove_cvref_t<decltype(config.*member)>;
          if constexpr (std::is_same_v<T, double>) {
            os << format_double(config.*member);
          } else if constexpr (std::is_same_v<T, std::optional<double>>) {
            os << (config.*member ? format_double(*(config.*member)) : std::string("auto"));
          } else {
            os << config.*member;
          }
        },
        k.field);
    os << '\n';
  }
  return os.str();
}

DeviceModel RunConfig::to_model() const {
  DeviceFrequencies f;
  f.omega_gg_prime = ghz(omega_gg_prime_ghz);
  f.omega_eg = ghz(omega_eg_ghz);
  f.omega_eg_prime = ghz(omega_eg_prime_ghz);
  f.omega_fe = ghz(omega_fe_ghz);
  f.omega_fg = ghz(omega_fg_ghz);
  f.omega_c1 = ghz(omega_c1_ghz);
  f.omega_c2 = ghz(omega_c2_ghz);
  if (k < 0) throw ConfigError("k must be a non-negative integer");
  if (!(g12_ratio >= 0.0 && g12_ratio <= 1.0)) throw ConfigError("g12_ratio must lie in [0, 1]");

  const Detunings d = detunings(f);
  const double g1 = mhz(g1_mhz);
  const double g2 = g2_mhz ? mhz(*g2_mhz) : required_g2(d.delta1, d.delta2, k);
  CouplingSet c = CouplingSet::with_dipole_ratios(g1, g2);
  auto override_with = [](double& slot, const std::optional<double>& v) {
    if (v) slot = mhz(*v);
  };
  override_with(c.g1_p, g1_prime_mhz);
  override_with(c.g1_pp, g1_double_prime_mhz);
  override_with(c.g1_ppp, g1_triple_prime_mhz);
  override_with(c.g2_p, g2_prime_mhz);
  override_with(c.g2_pp, g2_double_prime_mhz);
  override_with(c.g2_ppp, g2_triple_prime_mhz);
  c.g12 = g12_ratio * c.g_max();

  DecoherenceRates r;
  r.kappa1 = lifetime_rate("kappa_inv_us", kappa_inv_us);
  r.kappa2 = r.kappa1;
  r.gamma_gg_prime = lifetime_rate("gamma_gg_prime_inv_us", gamma_gg_prime_inv_us);
  r.gamma_eg = lifetime_rate("gamma_eg_inv_us", gamma_eg_inv_us);
  r.gamma_eg_prime = lifetime_rate("gamma_eg_prime_inv_us", gamma_eg_prime_inv_us);
  r.gamma_fg_prime = lifetime_rate("gamma_fg_prime_inv_us", gamma_fg_prime_inv_us);
  r.gamma_fg = lifetime_rate("gamma_fg_inv_us", gamma_fg_inv_us);
  r.gamma_fe = lifetime_rate("gamma_fe_inv_us", gamma_fe_inv_us);
  r.gamma_f_phi = lifetime_rate("gamma_f_phi_inv_us", gamma_f_phi_inv_us);
  r.gamma_e_phi = lifetime_rate("gamma_e_phi_inv_us", gamma_e_phi_inv_us);
  r.gamma_g_phi = lifetime_rate("gamma_g_phi_inv_us", gamma_g_phi_inv_us);
  return DeviceModel(f, c, r, k);
}

CompositeSpace RunConfig::space() const {
  if (n_trunc_1 < 2 || n_trunc_2 < 2) throw ConfigError("cavity truncations must be at least 2");
  return CompositeSpace(n_trunc_1, n_trunc_2);
}

IntegratorConfig RunConfig::integrator() const {
  IntegratorConfig cfg;
  if (step_ps) {
    if (!(*step_ps > 0.0)) throw ConfigError("step_ps must be positive");
    cfg.step = *step_ps * 1e-12;
  }
  if (!(steps_per_period > 0.0)) throw ConfigError("steps_per_period must be positive");
  if (!(closed_steps_per_period > 0.0)) throw ConfigError("closed_steps_per_period must be positive");
  if (diagnostic_every < 1) throw ConfigError("diagnostic_every must be at least 1");
  if (hermitize_every < 0) throw ConfigError("hermitize_every must be non-negative");
  cfg.steps_per_period = steps_per_period;
  cfg.closed_steps_per_period = closed_steps_per_period;
  cfg.hermitize_every = hermitize_every;
  cfg.diagnostic_every = diagnostic_every;
  cfg.trace_tol = trace_tol;
  cfg.hermiticity_tol = hermiticity_tol;
  cfg.negativity_floor = negativity_floor;
  return cfg;
}

CatSpec RunConfig::cat_spec() const {
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  if (n_trunc_1 != n_trunc_2) throw ConfigError("cat encoding needs equal cavity truncations");
  CatSpec s;
  s.alpha = alpha;
  s.dim = n_trunc_1;
  return s;
}

}  // namespace ccz
