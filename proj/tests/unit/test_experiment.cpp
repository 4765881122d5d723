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

#include <doctest.h>

#include <sstream>

#include "cczsim/error.hpp"
#include "cczsim/experiment.hpp"
#include "oracle_values.hpp"

using namespace ccz;

namespace {

// Tiny lossy problem: 3 x 3 x 4 space, short gate.
RunConfig tiny() {
  RunConfig c;
  c.alpha = 0.02;
  c.n_trunc_1 = 3;
  c.n_trunc_2 = 3;
  c.gate_time_us = 0.001;
  return c;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("experiment") {
  TEST_CASE("parameter report") {
    const RunConfig c;
    const std::string r = params_report(c.to_model(), c);
    CHECK(r.find("chi                   1.18941 MHz/2pi") != std::string::npos);
    CHECK(r.find("t                     0.420375 us") != std::string::npos);
    CHECK(r.find("s                     -5") != std::string::npos);
    CHECK(r.find("g1/delta1") != std::string::npos);
  }

  TEST_CASE("reference table check") {
    const auto checks = check_table1(RunConfig{}.to_model());
    CHECK(checks.size() == 10);
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CHECK(c.ok());
    }
    RunConfig off;
    off.omega_c1_ghz = 18.35;
    off.g2_mhz = 85.1;
    int failed = 0;
    for (const auto& c : check_table1(off.to_model())) failed += c.ok() ? 0 : 1;
    CHECK(failed == 3);
  }

  TEST_CASE("GHZ states") {
    const CompositeSpace s(6, 6);
    const LogicalPair pair = cat_pair(CatSpec{});
    const StateVector in = ghz_initial_state(pair, s);
    const StateVector target = ghz_target_state(pair, s);
    CHECK(in.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(target.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(in.inner(target)) == doctest::Approx(0.5).epsilon(1e-12));
    const DeviceModel m = reference_model();
    const auto& d = m.derived();
    const StateVector out = ideal_gate_unitary(s, d.eta, d.chi, d.gate_time).apply(in);
    CHECK(std::abs(target.inner(out)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("GHZ through the exact engines") {
    RunConfig c;
    for (Engine e : {Engine::IdealDiagonal, Engine::Eff6, Engine::Eff5}) {
      const GhzResult r = run_ghz(c, e);
      CHECK(r.ok);
      CHECK(r.fidelity == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(r.gate_time == doctest::Approx(0.420375e-6).epsilon(1e-5));
    }
    c.gate_time_us = 0.0;
    CHECK(run_ghz(c, Engine::Eff5).fidelity == doctest::Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("GHZ lossy run on a tiny space") {
    const GhzResult r = run_ghz(tiny());
    REQUIRE(r.ok);
    CHECK(r.steps > 100);
    CHECK(r.fidelity > 0.4);
    CHECK(r.fidelity < 1.0);
    CHECK(r.trace_error < 1e-10);
    CHECK(r.hermiticity_error < 1e-12);
    CHECK(r.min_eigenvalue > -1e-9);
  }

  TEST_CASE("sweep order, determinism and CSV") {
    RunConfig c = tiny();
    c.workers = 3;
    const SweepSpec spec{{5.0, 10.0}, {0.0, 0.1}};
    const auto rows = run_sweep(c, spec);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].g12_over_gmax == 0.0);
    CHECK(rows[0].kappa_inv_us == 5.0);
    CHECK(rows[1].kappa_inv_us == 10.0);
    CHECK(rows[2].g12_over_gmax == 0.1);
    for (const auto& r : rows) CHECK(r.status == "ok");
    CHECK(rows[1].result.fidelity > rows[0].result.fidelity);

    c.workers = 1;
    int seen = 0;
    const auto again = run_sweep(c, spec, [&](const SweepRow&) { ++seen; });
    CHECK(seen == 4);
    std::ostringstream a, b;
    write_sweep_csv(a, rows, false);
    write_sweep_csv(b, again, false);
    CHECK(a.str() == b.str());
    const std::string csv = a.str();
    CHECK(csv.rfind("kappa_inv_us,g12_over_gmax,fidelity,trace_error,min_eigenvalue,runtime_s,status\n", 0) == 0);
    CHECK(count(csv, "\n") == 5);
    CHECK(count(csv, ",0.000,ok\n") == 4);

    const std::string svg = sweep_svg(rows);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count(svg, "<polyline") == 2);
    CHECK(count(svg, "<circle") == 4);
    CHECK(svg.find("</svg>") != std::string::npos);
  }

  TEST_CASE("failed points become status rows") {
    RunConfig c = tiny();
    c.hermiticity_tol = -1.0;
    const auto rows = run_sweep(c, SweepSpec{{10.0}, {0.0, 0.01}});
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
      CHECK_FALSE(r.result.ok);
      CHECK(r.status.find("Hermiticity") != std::string::npos);
    }
    std::ostringstream out;
    write_sweep_csv(out, rows);
    CHECK(count(out.str(), "\n") == 3);
    CHECK(count(sweep_svg(rows), "<polyline") == 0);
  }

  TEST_CASE("sweep specs are validated") {
    CHECK_THROWS_AS(SweepSpec({}, {0.0}).validate(), ConfigError);
    CHECK_THROWS_AS(SweepSpec({10.0}, {}).validate(), ConfigError);
    CHECK_THROWS_AS(SweepSpec({-1.0}, {0.0}).validate(), ConfigError);
    CHECK_THROWS_AS(SweepSpec({10.0}, {1.5}).validate(), ConfigError);
    RunConfig bad = tiny();
    bad.omega_c2_ghz = bad.omega_fe_ghz;
    CHECK_THROWS_AS(run_sweep(bad, SweepSpec{{10.0}, {0.0}}), RegimeError);
  }

  TEST_CASE("number lists") {
    CHECK(parse_number_list("5,10, 20 ,50") == std::vector<double>{5, 10, 20, 50});
    CHECK(parse_number_list("1e-2") == std::vector<double>{0.01});
    CHECK_THROWS_AS(parse_number_list(""), ConfigError);
    CHECK_THROWS_AS(parse_number_list("1,,2"), ConfigError);
    CHECK_THROWS_AS(parse_number_list("1,x"), ConfigError);
  }

  TEST_CASE("closed full-model GHZ against the oracle") {
    RunConfig c;
    CHECK(run_ghz(c, Engine::FullClosed).fidelity == doctest::Approx(oracle::kFullClosedGhzFidelity0).epsilon(1e-6));
    c.g12_ratio = 0.1;
    CHECK(run_ghz(c, Engine::FullClosed).fidelity == doctest::Approx(oracle::kFullClosedGhzFidelity01).epsilon(1e-6));
  }

  TEST_CASE("effective validation at full coupling") {
    const ValidationReport r = validate_effective(RunConfig{}, 1.0);
    REQUIRE(r.cases.size() == 2);
    CHECK(r.cases[0].state == "fock|1,1,g>");
    CHECK(r.cases[1].state == "cat-ghz-input");
    CHECK(r.g1_over_delta1 == doctest::Approx(95.7 / 700.0));
    CHECK(r.gate_time == doctest::Approx(0.420375e-6).epsilon(1e-5));
    CHECK(r.cases[0].infidelity == doctest::Approx(oracle::kValidateFock1).epsilon(1e-5));
    CHECK(r.cases[1].infidelity == doctest::Approx(oracle::kValidateGhz1).epsilon(1e-5));
    CHECK(r.worst() == std::max(r.cases[0].infidelity, r.cases[1].infidelity));
    CHECK_THROWS_AS(validate_effective(RunConfig{}, 0.0), ConfigError);
    CHECK_THROWS_AS(validate_effective(RunConfig{}, 1.5), ConfigError);
  }
}
