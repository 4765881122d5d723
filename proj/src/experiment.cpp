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

#include "cczsim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "cczsim/error.hpp"
#include "cczsim/units.hpp"

namespace ccz {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

}  // namespace

std::string params_report(const DeviceModel& model, const RunConfig& config) {
  const Detunings& d = model.detuning();
  const DerivedCouplings& c = model.derived();
  const CouplingSet& g = model.couplings();
  std::ostringstream os;
  auto line = [&](const char* name, const std::string& value, const char* unit) {
    os << name;
    for (std::size_t i = std::string_view(name).size(); i < 22; ++i) os << ' ';
    os << value << (unit[0] ? " " : "") << unit << '\n';
  };
  auto ghz_line = [&](const char* name, double v) { line(name, fmt("%.6g", to_ghz(v)), "GHz/2pi"); };
  auto mhz_line = [&](const char* name, double v) { line(name, fmt("%.6g", to_mhz(v)), "MHz/2pi"); };
  os << "# detunings\n";
  ghz_line("delta1", d.delta1);
  ghz_line("delta1'", d.delta1_p);
  ghz_line("delta1''", d.delta1_pp);
  ghz_line("delta1'''", d.delta1_ppp);
  ghz_line("delta2", d.delta2);
  ghz_line("delta2'", d.delta2_p);
  ghz_line("delta2''", d.delta2_pp);
  ghz_line("delta2'''", d.delta2_ppp);
  ghz_line("Delta", d.Delta);
  ghz_line("Delta12", d.Delta12);
  os << "# couplings\n";
  mhz_line("g1", g.g1);
  mhz_line("g1'", g.g1_p);
  mhz_line("g1''", g.g1_pp);
  mhz_line("g1'''", g.g1_ppp);
  mhz_line("g2", g.g2);
  mhz_line("g2'", g.g2_p);
  mhz_line("g2''", g.g2_pp);
  mhz_line("g2'''", g.g2_ppp);
  mhz_line("g12", g.g12);
  os << "# derived\n";
  mhz_line("lambda1", c.lambda1);
  mhz_line("lambda2", c.lambda2);
  mhz_line("lambda", c.lambda);
  mhz_line("chi", c.chi);
  mhz_line("eta", c.eta);
  line("t", fmt("%.6g", to_microseconds(c.gate_time)), "us");
  line("k", std::to_string(c.k), "");
  line("s", std::to_string(c.s), "");
  line("lambda1 t / pi", fmt("%.6g", c.lambda1_t_over_pi), "");
  line("eta t / pi", fmt("%.6g", c.eta_t_over_pi), "");
  line("Q1", fmt("%.6g", c.q1), "");
  line("Q2", fmt("%.6g", c.q2), "");
  line("kappa^-1", fmt("%.6g", config.kappa_inv_us), "us");
  os << "# dispersive ratios\n";
  line("g1/delta1", fmt("%.4g", c.ratios.g1_over_delta1), "");
  line("g2/delta2", fmt("%.4g", c.ratios.g2_over_delta2), "");
  line("lambda/Delta", fmt("%.4g", c.ratios.lambda_over_Delta), "");
  line("lambda1/Delta", fmt("%.4g", c.ratios.lambda1_over_Delta), "");
  line("lambda2/Delta", fmt("%.4g", c.ratios.lambda2_over_Delta), "");
  return os.str();
}

std::vector<TableCheck> check_table1(const DeviceModel& model, double tolerance) {
  const Detunings& d = model.detuning();
  std::vector<TableCheck> out;
  auto add = [&](const char* name, double value, double reference) {
    TableCheck c;
    c.name = name;
    c.value = value;
    c.reference = reference;
    c.relative_error = std::abs(value - reference) / std::abs(reference);
    c.tolerance = tolerance;
    out.push_back(c);
  };
  add("delta1", to_ghz(d.delta1), 0.7);
  add("delta1'", to_ghz(d.delta1_p), -6.3);
  add("delta1''", to_ghz(d.delta1_pp), -11.3);
  add("delta1'''", to_ghz(d.delta1_ppp), -10.3);
  add("delta2", to_ghz(d.delta2), 0.8);
  add("delta2'", to_ghz(d.delta2_p), 7.8);
  add("delta2''", to_ghz(d.delta2_pp), -4.2);
  add("delta2'''", to_ghz(d.delta2_ppp), -3.2);
  add("Delta12", to_ghz(d.Delta12), 7.1);
  add("g2", to_mhz(model.couplings().g2), 85.1);
  return out;
}

StateVector ghz_initial_state(const LogicalPair& pair, const CompositeSpace& space) {
  const double r = 1.0 / std::numbers::sqrt2;
  LogicalProduct even;
  even.q3 = {r, r};
  LogicalProduct odd = even;
  odd.q1 = {0.0, 1.0};
  odd.q2 = {0.0, 1.0};
  return (logical_product_state(pair, space, even) + logical_product_state(pair, space, odd)).scaled(r);
}

StateVector ghz_target_state(const LogicalPair& pair, const CompositeSpace& space) {
  const double r = 1.0 / std::numbers::sqrt2;
  LogicalProduct even;
  even.q3 = {r, r};
  LogicalProduct odd;
  odd.q1 = {0.0, 1.0};
  odd.q2 = {0.0, 1.0};
  odd.q3 = {r, -r};
  return (logical_product_state(pair, space, even) + logical_product_state(pair, space, odd)).scaled(r);
}

GhzResult run_ghz(const RunConfig& config, Engine engine) {
  const DeviceModel model = config.to_model();
  const CompositeSpace space = config.space();
  const LogicalPair pair = cat_pair(config.cat_spec());
  GateSchedule schedule = GateSchedule::from_model(model, engine);
  if (config.gate_time_us) schedule.gate_time = microseconds(*config.gate_time_us);
  schedule.integrator = config.integrator();

  const EvolutionResult run = run_engine(ghz_initial_state(pair, space), model, schedule);
  GhzResult r;
  r.ok = run.ok;
  r.failure = run.failure;
  r.gate_time = schedule.gate_time;
  r.step = run.step;
  r.steps = run.steps;
  r.runtime_s = run.wall_seconds;
  const StateVector target = ghz_target_state(pair, space);
  if (run.rho) {
    r.fidelity = fidelity(*run.rho, target);
    r.trace_error = run.max_trace_error();
    r.hermiticity_error = run.max_hermiticity_error();
    r.min_eigenvalue = run.lowest_eigenvalue();
  } else {
    r.fidelity = fidelity(*run.psi, target);
    r.trace_error = run.max_norm_error();
  }
  return r;
}

void SweepSpec::validate() const {
  if (kappa_inv_us.empty()) throw ConfigError("sweep needs at least one kappa^-1 value");
  if (g12_ratios.empty()) throw ConfigError("sweep needs at least one g12 ratio");
  for (double k : kappa_inv_us) {
    if (!(k > 0.0)) throw ConfigError("kappa^-1 values must be positive");
  }
  for (double r : g12_ratios) {
    if (!(r >= 0.0 && r <= 1.0)) throw ConfigError("g12 ratios must lie in [0, 1]");
  }
}

std::vector<SweepRow> run_sweep(const RunConfig& config, const SweepSpec& spec,
                                const SweepProgress& progress) {
  spec.validate();
  std::vector<SweepRow> rows;
  for (double ratio : spec.g12_ratios) {
    for (double kappa : spec.kappa_inv_us) {
      SweepRow row;
      row.kappa_inv_us = kappa;
      row.g12_over_gmax = ratio;
      rows.push_back(row);
    }
  }
  // Surface configuration errors before any thread starts.
  (void)config.to_model();

  std::atomic<std::size_t> next{0};
  std::mutex report;
  auto worker = [&]() {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      SweepRow& row = rows[i];
      RunConfig point = config;
      point.kappa_inv_us = row.kappa_inv_us;
      point.g12_ratio = row.g12_over_gmax;
      try {
        row.result = run_ghz(point);
        row.status = row.result.ok ? "ok" : row.result.failure;
      } catch (const std::exception& e) {
        row.result.ok = false;
        row.status = e.what();
      }
      if (progress) {
        std::lock_guard lock(report);
        progress(row);
      }
    }
  };
  const int workers = std::clamp(config.workers, 1, static_cast<int>(rows.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool timing) {
  out << "kappa_inv_us,g12_over_gmax,fidelity,trace_error,min_eigenvalue,runtime_s,status\n";
  for (const auto& row : rows) {
    std::string status = row.status;
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    out << fmt("%.10g", row.kappa_inv_us) << ',' << fmt("%.10g", row.g12_over_gmax) << ','
        << fmt("%.12f", row.result.fidelity) << ',' << fmt("%.6e", row.result.trace_error) << ','
        << fmt("%.6e", row.result.min_eigenvalue) << ','
        << fmt("%.3f", timing ? row.result.runtime_s : 0.0) << ',' << status << '\n';
  }
}

std::string sweep_svg(const std::vector<SweepRow>& rows) {
  const double width = 640, height = 400, left = 70, right = 20, top = 20, bottom = 50;
  std::map<double, std::vector<const SweepRow*>> curves;
  double xmin = 1e300, xmax = -1e300, ymin = 1.0, ymax = 0.0;
  for (const auto& r : rows) {
    if (!r.result.ok) continue;
    curves[r.g12_over_gmax].push_back(&r);
    xmin = std::min(xmin, std::log10(r.kappa_inv_us));
    xmax = std::max(xmax, std::log10(r.kappa_inv_us));
    ymin = std::min(ymin, r.result.fidelity);
    ymax = std::max(ymax, r.result.fidelity);
  }
  if (curves.empty()) {
    xmin = 0;
    xmax = 1;
  }
  if (xmax - xmin < 1e-12) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  const double pad = std::max(1e-3, 0.05 * (ymax - ymin));
  ymin = curves.empty() ? 0.0 : ymin - pad;
  ymax = curves.empty() ? 1.0 : std::min(1.0, ymax + pad);
  auto px = [&](double k) { return left + (std::log10(k) - xmin) / (xmax - xmin) * (width - left - right); };
  auto py = [&](double f) { return top + (ymax - f) / (ymax - ymin) * (height - top - bottom); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
     << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
     << height - bottom << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = ymin + (ymax - ymin) * i / 4.0;
    os << "<text x=\"" << left - 6 << "\" y=\"" << py(f) + 4 << "\" text-anchor=\"end\">"
       << fmt("%.4f", f) << "</text>\n";
  }
  std::vector<double> ticks;
  for (const auto& r : rows) ticks.push_back(r.kappa_inv_us);
  std::sort(ticks.begin(), ticks.end());
  ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
  for (double k : ticks) {
    if (k <= 0.0) continue;
    os << "<text x=\"" << px(k) << "\" y=\"" << height - bottom + 16 << "\" text-anchor=\"middle\">"
       << fmt("%g", k) << "</text>\n";
  }
  os << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 10
     << "\" text-anchor=\"middle\">kappa^-1 (us)</text>\n";
  os << "<text x=\"16\" y=\"" << (top + height - bottom) / 2
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (top + height - bottom) / 2
     << ")\">fidelity</text>\n";
  int index = 0;
  for (auto& [ratio, points] : curves) {
    std::sort(points.begin(), points.end(),
              [](const SweepRow* a, const SweepRow* b) { return a->kappa_inv_us < b->kappa_inv_us; });
    const char* color = colors[index % 6];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const SweepRow* p : points) os << px(p->kappa_inv_us) << ',' << py(p->result.fidelity) << ' ';
    os << "\"/>\n";
    for (const SweepRow* p : points) {
      os << "<circle cx=\"" << px(p->kappa_inv_us) << "\" cy=\"" << py(p->result.fidelity)
         << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    os << "<text x=\"" << width - right - 130 << "\" y=\"" << top + 40 + 16 * index << "\" fill=\""
       << color << "\">g12/gmax = " << fmt("%g", ratio) << "</text>\n";
    ++index;
  }
  os << "</svg>\n";
  return os.str();
}

double ValidationReport::worst() const {
  double m = 0.0;
  for (const auto& c : cases) m = std::max(m, c.infidelity);
  return m;
}

ValidationReport validate_effective(const RunConfig& config, double scale) {
  if (!(scale > 0.0 && scale <= 1.0)) throw ConfigError("coupling scale must lie in (0, 1]");
  const DeviceModel base = config.to_model();
  const DeviceModel model = base.with_couplings(base.couplings().wanted_only().scaled(scale));
  const CompositeSpace space = config.space();
  const LogicalPair cats = cat_pair(config.cat_spec());

  GateSchedule rwa = GateSchedule::from_model(model, Engine::Rwa);
  rwa.integrator = config.integrator();
  GateSchedule kerr = rwa;
  kerr.engine = Engine::Eff5;

  ValidationReport report;
  report.scale = scale;
  report.gate_time = rwa.gate_time;
  report.g1_over_delta1 = model.derived().ratios.g1_over_delta1;
  auto compare = [&](const std::string& name, const StateVector& input) {
    const EvolutionResult a = run_engine(input, model, rwa);
    if (!a.ok) throw NumericalError("rwa propagation of " + name + ": " + a.failure);
    const EvolutionResult b = run_engine(input, model, kerr);
    report.cases.push_back({name, 1.0 - std::min(1.0, std::abs(b.psi->inner(*a.psi)))});
  };
  compare("fock|1,1,g>", StateVector::basis(space, {1, 1, Level::G}));
  compare("cat-ghz-input", ghz_initial_state(cats, space));
  return report;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ConfigError("empty entry in list '" + text + "'");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ConfigError("'" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

}  // namespace ccz
