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

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cczsim/config.hpp"
#include "cczsim/error.hpp"
#include "cczsim/experiment.hpp"
#include "cczsim/gate.hpp"
#include "cczsim/units.hpp"

namespace {

constexpr int kConfigExit = 2;
constexpr int kNumericalExit = 3;

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

int fail(const char* kind, const std::string& message, int code) {
  std::cerr << "error[" << kind << "]: " << one_line(message) << '\n';
  return code;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

ccz::LogicalPair encoding_pair(const std::string& encoding, const ccz::RunConfig& cfg) {
  if (encoding == "fock") return ccz::fock_pair(0, 0, std::min(cfg.n_trunc_1, cfg.n_trunc_2));
  if (encoding == "cat") return ccz::cat_pair(cfg.cat_spec());
  throw ccz::ConfigError("unknown encoding '" + encoding + "' (expected fock or cat)");
}

ccz::GateSchedule schedule_for(const ccz::RunConfig& cfg, const ccz::DeviceModel& model,
                               ccz::Engine engine) {
  ccz::GateSchedule s = ccz::GateSchedule::from_model(model, engine);
  if (cfg.gate_time_us) s.gate_time = ccz::microseconds(*cfg.gate_time_us);
  s.integrator = cfg.integrator();
  return s;
}

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;

  bool check_table1 = false;

  std::string encoding = "fock";
  std::string engine = "ideal";
  std::string csv_path;

  std::optional<double> kappa_inv;
  std::optional<double> g12_ratio;
  std::string ghz_engine = "lossy";

  std::string kappa_list;
  std::string ratio_list;
  std::string out_path;
  std::string plot_path;
  std::optional<int> workers;
  bool no_timing = false;

  double scale = 1.0;
  int samples = 0;
};

ccz::RunConfig load(const Options& o) {
  ccz::RunConfig cfg = o.config_path.empty() ? ccz::RunConfig{} : ccz::load_config(o.config_path);
  if (o.seed) cfg.seed = *o.seed;
  return cfg;
}

int cmd_params(const Options& o) {
  const ccz::RunConfig cfg = load(o);
  const ccz::DeviceModel model = cfg.to_model();
  std::cout << ccz::params_report(model, cfg);
  if (!o.check_table1) return 0;
  std::cout << "# table check (0.5%)\n";
  std::string bad;
  for (const auto& c : ccz::check_table1(model)) {
    std::cout << c.name << ' ' << fmt("%.6g", c.value) << " ref " << fmt("%.6g", c.reference) << " rel "
              << fmt("%.3e", c.relative_error) << (c.ok() ? " ok" : " MISMATCH") << '\n';
    if (!c.ok()) bad += (bad.empty() ? "" : ",") + c.name;
  }
  if (!bad.empty()) return fail("config", "table mismatch beyond 0.5% in " + bad, kConfigExit);
  return 0;
}

int cmd_truth_table(const Options& o) {
  const ccz::RunConfig cfg = load(o);
  const ccz::DeviceModel model = cfg.to_model();
  const ccz::LogicalPair pair = encoding_pair(o.encoding, cfg);
  const ccz::GateSchedule schedule = schedule_for(cfg, model, ccz::parse_engine(o.engine));
  const ccz::TruthTableReport report = ccz::truth_table(pair, model, schedule, cfg.space());

  const bool open = ccz::is_open(schedule.engine);
  std::cout << "# engine " << ccz::to_string(schedule.engine) << ", encoding " << o.encoding
            << ", t = " << fmt("%.6g", ccz::to_microseconds(schedule.gate_time)) << " us\n";
  std::cout << "basis,target_phase," << (open ? "fidelity" : "overlap")
            << ",phase_error_deg,leakage,excited_population\n";
  std::ofstream csv;
  if (!o.csv_path.empty()) {
    csv.open(o.csv_path);
    if (!csv) return fail("config", "cannot write '" + o.csv_path + "'", kConfigExit);
    csv << "basis,target_phase,overlap,phase_error_deg,leakage,excited_population\n";
  }
  for (const auto& r : report.rows) {
    std::string line = r.label + ',' + (r.target_phase > 0 ? "+1" : "-1") + ',' + fmt("%.10f", r.overlap) +
                       ',' + (r.phase_error ? fmt("%.6f", *r.phase_error) : std::string("undefined")) +
                       ',' + fmt("%.3e", r.leakage) + ',' + fmt("%.3e", r.excited_population);
    std::cout << line << '\n';
    if (csv.is_open()) csv << line << '\n';
  }
  return 0;
}

int cmd_ghz(const Options& o) {
  ccz::RunConfig cfg = load(o);
  if (o.kappa_inv) cfg.kappa_inv_us = *o.kappa_inv;
  if (o.g12_ratio) cfg.g12_ratio = *o.g12_ratio;
  const ccz::GhzResult r = ccz::run_ghz(cfg, ccz::parse_engine(o.ghz_engine));
  std::cout << "kappa_inv_us " << fmt("%g", cfg.kappa_inv_us) << '\n'
            << "g12_over_gmax " << fmt("%g", cfg.g12_ratio) << '\n'
            << "gate_time_us " << fmt("%.6g", ccz::to_microseconds(r.gate_time)) << '\n'
            << "steps " << r.steps << '\n'
            << "fidelity " << fmt("%.8f", r.fidelity) << '\n'
            << "trace_error " << fmt("%.3e", r.trace_error) << '\n'
            << "hermiticity_error " << fmt("%.3e", r.hermiticity_error) << '\n'
            << "min_eigenvalue " << fmt("%.3e", r.min_eigenvalue) << '\n'
            << "runtime_s " << fmt("%.2f", r.runtime_s) << '\n';
  if (!r.ok) return fail("numerical", r.failure, kNumericalExit);
  return 0;
}

int cmd_sweep(const Options& o) {
  ccz::RunConfig cfg = load(o);
  if (o.workers) cfg.workers = *o.workers;
  ccz::SweepSpec spec;
  spec.kappa_inv_us = ccz::parse_number_list(o.kappa_list);
  spec.g12_ratios = ccz::parse_number_list(o.ratio_list);
  spec.validate();
  std::ofstream csv(o.out_path);
  if (!csv) return fail("config", "cannot write '" + o.out_path + "'", kConfigExit);
  const auto rows = ccz::run_sweep(cfg, spec, [](const ccz::SweepRow& row) {
    std::cout << "kappa_inv_us=" << row.kappa_inv_us << " g12_over_gmax=" << row.g12_over_gmax
              << " fidelity=" << fmt("%.6f", row.result.fidelity) << " status=" << one_line(row.status)
              << '\n';
  });
  ccz::write_sweep_csv(csv, rows, !o.no_timing);
  if (!o.plot_path.empty()) {
    std::ofstream svg(o.plot_path);
    if (!svg) return fail("config", "cannot write '" + o.plot_path + "'", kConfigExit);
    svg << ccz::sweep_svg(rows);
  }
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.result.ok; });
  if (failed > 0) {
    return fail("numerical", std::to_string(failed) + " of " + std::to_string(rows.size()) + " sweep points failed",
                kNumericalExit);
  }
  return 0;
}

int cmd_validate(const Options& o) {
  const ccz::RunConfig cfg = load(o);
  const ccz::ValidationReport r = ccz::validate_effective(cfg, o.scale);
  std::cout << "scale " << fmt("%g", r.scale) << '\n'
            << "g1_over_delta1 " << fmt("%.4g", r.g1_over_delta1) << '\n'
            << "gate_time_us " << fmt("%.6g", ccz::to_microseconds(r.gate_time)) << '\n';
  for (const auto& c : r.cases) std::cout << "infidelity " << c.state << ' ' << fmt("%.6e", c.infidelity) << '\n';
  return 0;
}

int cmd_average(const Options& o) {
  const ccz::RunConfig cfg = load(o);
  const ccz::DeviceModel model = cfg.to_model();
  const ccz::LogicalPair pair = encoding_pair(o.encoding, cfg);
  const ccz::GateSchedule schedule = schedule_for(cfg, model, ccz::parse_engine(o.engine));
  const int samples = o.samples > 0 ? o.samples : cfg.samples;
  const double f = ccz::average_gate_fidelity(pair, model, schedule, cfg.space(), samples, cfg.seed);
  std::cout << "engine " << ccz::to_string(schedule.engine) << '\n'
            << "samples " << samples << '\n'
            << "seed " << cfg.seed << '\n'
            << "average_fidelity " << fmt("%.10f", f) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid parity-encoded CCZ gate simulator"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config_path, "key = value run configuration");
  app.add_option("--seed", o.seed, "random seed for Monte Carlo sampling");

  auto* params = app.add_subcommand("params", "derived parameter report");
  params->add_flag("--check-table1", o.check_table1, "compare against the reference table (0.5%)");

  auto* tt = app.add_subcommand("truth-table", "8-state gate truth table");
  tt->add_option("--encoding", o.encoding, "fock or cat")->check(CLI::IsMember({"fock", "cat"}));
  tt->add_option("--engine", o.engine, "ideal, eff6, eff5, eff4, rwa, full or lossy");
  tt->add_option("--csv", o.csv_path, "also write the table as CSV");

  auto* ghz = app.add_subcommand("ghz", "cat-cat-spin GHZ generation fidelity");
  ghz->add_option("--kappa-inv", o.kappa_inv, "cavity lifetime (us)");
  ghz->add_option("--g12-ratio", o.g12_ratio, "crosstalk g12 / g_max");
  ghz->add_option("--engine", o.ghz_engine, "engine (default lossy)");

  auto* sweep = app.add_subcommand("sweep", "GHZ fidelity over a kappa x crosstalk grid");
  sweep->add_option("--kappa-inv", o.kappa_list, "comma-separated cavity lifetimes (us)")->required();
  sweep->add_option("--g12-ratio", o.ratio_list, "comma-separated g12 / g_max")->required();
  sweep->add_option("--out", o.out_path, "CSV output")->required();
  sweep->add_option("--plot", o.plot_path, "SVG output");
  sweep->add_option("--workers", o.workers, "concurrent grid points");
  sweep->add_flag("--no-timing", o.no_timing, "write runtime_s as 0 for byte-stable output");

  auto* validate = app.add_subcommand("validate-effective", "RWA vs cross-Kerr propagation");
  validate->add_option("--scale", o.scale, "coupling scale factor in (0, 1]");

  auto* average = app.add_subcommand("average-fidelity", "Monte Carlo average gate fidelity");
  average->add_option("--encoding", o.encoding, "fock or cat")->check(CLI::IsMember({"fock", "cat"}));
  average->add_option("--engine", o.engine, "ideal, eff6, eff5, eff4, rwa, full or lossy");
  average->add_option("--samples", o.samples, "number of Haar-random inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("config", e.what(), kConfigExit);
  }

  try {
    if (*params) return cmd_params(o);
    if (*tt) return cmd_truth_table(o);
    if (*ghz) return cmd_ghz(o);
    if (*sweep) return cmd_sweep(o);
    if (*validate) return cmd_validate(o);
    if (*average) return cmd_average(o);
  } catch (const ccz::NumericalError& e) {
    return fail("numerical", e.what(), kNumericalExit);
  } catch (const ccz::Error& e) {
    return fail("config", e.what(), kConfigExit);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
  return 0;
}
