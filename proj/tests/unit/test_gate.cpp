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

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "cczsim/error.hpp"
#include "cczsim/gate.hpp"
#include "cczsim/hamiltonian.hpp"

using namespace ccz;

namespace {

constexpr double kPi = std::numbers::pi;

// chi t = pi, eta t = -10 pi.
constexpr double kT = 1.0;
constexpr double kChi = kPi;
constexpr double kEta = -10.0 * kPi;

LogicalPair cat() { return cat_pair(CatSpec{}); }

int sign_of(const TruthTableRow& r) {
  REQUIRE(r.phase.has_value());
  return std::cos(*r.phase) > 0.0 ? 1 : -1;
}

}  // namespace

TEST_SUITE("gate") {
  TEST_CASE("engine names") {
    CHECK(parse_engine("ideal") == Engine::IdealDiagonal);
    CHECK(parse_engine("ideal-diagonal") == Engine::IdealDiagonal);
    CHECK(parse_engine("full-closed") == Engine::FullClosed);
    CHECK(parse_engine("lossy") == Engine::FullLossy);
    for (Engine e : {Engine::IdealDiagonal, Engine::Eff6, Engine::Eff5, Engine::Eff4, Engine::Rwa,
                     Engine::FullClosed, Engine::FullLossy}) {
      CHECK(parse_engine(to_string(e)) == e);
      CHECK(is_open(e) == (e == Engine::FullLossy));
    }
    CHECK_THROWS_AS(parse_engine("eff7"), ConfigError);
  }

  TEST_CASE("phase factors") {
    CHECK(std::abs(phase_factor(1, 1, Level::G, kEta, kChi, kT) + 1.0) < 1e-12);
    for (int n2 = 0; n2 < 8; ++n2) CHECK(phase_factor(0, n2, Level::G, kEta, kChi, kT) == cplx(1.0));
    CHECK(std::abs(phase_factor(2, 3, Level::G, kEta, kChi, kT) - 1.0) < 1e-12);
    CHECK(phase_factor(3, 3, Level::GPrime, kEta, kChi, kT) == cplx(1.0));
    CHECK_THROWS_AS(phase_factor(1, 1, Level::E, kEta, kChi, kT), LogicalSpaceError);
    CHECK_THROWS_AS(phase_factor(1, 1, Level::F, kEta, kChi, kT), LogicalSpaceError);
    CHECK_THROWS_AS(phase_factor(-1, 1, Level::G, kEta, kChi, kT), InvalidDimension);
  }

  TEST_CASE("phase table") {
    const CompositeSpace s(6, 6);
    const PhaseTable t(s, kEta, kChi, kT);
    CHECK(t.modulus_error() < 1e-12);
    for (int n1 = 0; n1 < 6; ++n1) {
      for (int n2 = 0; n2 < 6; ++n2) {
        CHECK(t.at(n1, n2, Level::G) == phase_factor(n1, n2, Level::G, kEta, kChi, kT));
        CHECK(t.at(n1, n2, Level::GPrime) == cplx(1.0));
      }
    }
    CHECK_THROWS_AS(t.at(6, 0, Level::G), InvalidDimension);
    CHECK_THROWS_AS(t.at(0, 0, Level::E), LogicalSpaceError);
  }

  TEST_CASE("ideal unitary equals the exponential of the diagonal model") {
    const CompositeSpace s(4, 4);
    const DeviceModel m = reference_model();
    const auto& d = m.derived();
    const DenseMatrix h = gate_hamiltonian(s, m).at(0.0).dense();
    const DenseMatrix u_exp = (cplx(0.0, -d.gate_time) * h).exp();
    const DenseMatrix u = ideal_gate_unitary(s, d.eta, d.chi, d.gate_time).dense();
    CHECK((u - u_exp).cwiseAbs().maxCoeff() < 1e-10);
    const DenseMatrix id = DenseMatrix::Identity(s.dimension(), s.dimension());
    CHECK((u.adjoint() * u - id).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((ideal_gate_unitary(s, d.eta, d.chi, 0.0).dense() - id).cwiseAbs().maxCoeff() == 0.0);
    // Only |1,1,g> picks up the sign in the Fock encoding.
    const auto pair = fock_pair(0, 0, 4);
    const StateVector oo = logical_basis_state(pair, s, 1, 1, 1);
    CHECK(std::abs(oo.inner(ideal_gate_unitary(s, kEta, kChi, kT).apply(oo)) + 1.0) < 1e-12);
  }

  TEST_CASE("schedule from the reference model") {
    const DeviceModel m = reference_model();
    const GateSchedule g = GateSchedule::from_model(m, Engine::Eff5);
    CHECK(g.gate_time == m.derived().gate_time);
    CHECK(g.k == 5);
    CHECK(g.s == -5);
    CHECK(g.engine == Engine::Eff5);
    CHECK(g.closure_error(m) < 1e-9);
    GateSchedule off = g;
    off.gate_time *= 1.01;
    CHECK(off.closure_error(m) > 1e-3);
  }

  TEST_CASE("logical states") {
    const CompositeSpace s(6, 6);
    const auto pair = cat();
    for (int l = 0; l < 8; ++l) {
      const StateVector b = logical_basis_state(pair, s, l >> 2 & 1, l >> 1 & 1, l & 1);
      CHECK(b.norm() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(logical_leakage(pair, b) < 1e-12);
      if ((l & 1) == 0) CHECK(level_population(b, Level::GPrime) == doctest::Approx(1.0));
    }
    LogicalProduct p;
    p.q1 = {std::sqrt(0.5), std::sqrt(0.5)};
    p.q2 = {0.0, 1.0};
    p.q3 = {std::sqrt(0.5), cplx(0.0, std::sqrt(0.5))};
    const StateVector in = logical_product_state(pair, s, p);
    const StateVector out = ideal_ccz_output(pair, s, p);
    CHECK(in.norm() == doctest::Approx(1.0));
    CHECK(out.norm() == doctest::Approx(1.0));
    // Amplitude 1/2 on |o,o,g> flips: overlap 1 - 2 * 1/4.
    CHECK(std::abs(in.inner(out)) == doctest::Approx(0.5));
    CHECK(logical_leakage(pair, StateVector::basis(s, {0, 0, Level::E})) == doctest::Approx(1.0));
  }

  TEST_CASE("ideal truth tables carry the CCZ signature") {
    const CompositeSpace s(6, 6);
    const DeviceModel m = reference_model();
    const GateSchedule g = GateSchedule::from_model(m, Engine::IdealDiagonal);
    for (const LogicalPair& pair : {fock_pair(0, 0, 6), cat()}) {
      const TruthTableReport r = truth_table(pair, m, g, s);
      REQUIRE(r.rows.size() == 8);
      CHECK(r.min_overlap() > 1.0 - 1e-12);
      CHECK(r.max_phase_error() < 1e-7);
      CHECK(r.max_leakage() < 1e-12);
      CHECK(r.max_excited_population() == 0.0);
      CHECK(r.matches(0.999, 1.0));
      for (int l = 0; l < 8; ++l) {
        CHECK(r.rows[l].target_phase == (l == 7 ? -1 : 1));
        CHECK(sign_of(r.rows[l]) == r.rows[l].target_phase);
      }
      CHECK(r.rows[7].label == "|phi_o phi_o g>");
      CHECK(r.rows[0].label == "|phi_e phi_e g'>");
    }
  }

  TEST_CASE("parity alone fixes the signature") {
    const CompositeSpace s(6, 6);
    const DeviceModel m = reference_model();
    const GateSchedule g = GateSchedule::from_model(m, Engine::IdealDiagonal);
    const LogicalPair pairs[] = {fock_pair(0, 0, 6), fock_pair(1, 1, 6), fock_pair(2, 0, 6),
                                 fock_pair(0, 2, 6), cat()};
    const TruthTableReport ref = truth_table(pairs[0], m, g, s);
    for (const auto& p : pairs) {
      const TruthTableReport r = truth_table(p, m, g, s);
      for (int l = 0; l < 8; ++l) CHECK(sign_of(r.rows[l]) == sign_of(ref.rows[l]));
    }
  }

  TEST_CASE("zero gate time is the identity for every engine") {
    const CompositeSpace s(3, 3);
    const DeviceModel m = reference_model();
    const auto pair = fock_pair(0, 0, 3);
    for (Engine e : {Engine::IdealDiagonal, Engine::Eff6, Engine::Eff5, Engine::Eff4, Engine::Rwa,
                     Engine::FullClosed, Engine::FullLossy}) {
      CAPTURE(to_string(e));
      GateSchedule g = GateSchedule::from_model(m, e);
      g.gate_time = 0.0;
      const TruthTableReport r = truth_table(pair, m, g, s);
      for (const auto& row : r.rows) {
        CHECK(row.overlap == doctest::Approx(1.0));
        if (row.phase) {
          CHECK(std::abs(*row.phase) < 1e-12);
          CHECK(*row.phase_error == doctest::Approx(row.target_phase == 1 ? 0.0 : 180.0));
        }
      }
    }
    GateSchedule g = GateSchedule::from_model(m, Engine::Eff5);
    g.gate_time = -1.0;
    CHECK_THROWS_AS(run_engine(logical_basis_state(pair, s, 0, 0, 0), m, g), NumericalError);
  }

  TEST_CASE("effective Kerr engines reproduce the ideal table") {
    const CompositeSpace s(6, 6);
    const DeviceModel m = reference_model();
    for (Engine e : {Engine::Eff6, Engine::Eff5}) {
      const TruthTableReport r = truth_table(cat(), m, GateSchedule::from_model(m, e), s);
      CHECK(r.min_overlap() > 1.0 - 1e-9);
      CHECK(r.max_phase_error() < 1e-6);
      CHECK(r.max_leakage() < 1e-9);
    }
  }

  TEST_CASE("exchange engine stays close to the logical space") {
    const CompositeSpace s(6, 6);
    const DeviceModel m = reference_model();
    const TruthTableReport r = truth_table(fock_pair(0, 0, 6), m, GateSchedule::from_model(m, Engine::Eff4), s);
    CHECK(r.min_overlap() > 0.9);
    CHECK(r.max_excited_population() < 0.1);
  }

  TEST_CASE("average fidelity") {
    const CompositeSpace s(6, 6);
    const DeviceModel m = reference_model();
    const auto pair = cat();
    const GateSchedule ideal = GateSchedule::from_model(m, Engine::IdealDiagonal);
    for (std::uint64_t seed : {1u, 7u, 12345u}) {
      CHECK(average_gate_fidelity(pair, m, ideal, s, 20, seed) == doctest::Approx(1.0).epsilon(1e-9));
    }
    const auto a = haar_logical_inputs(5, 42), b = haar_logical_inputs(5, 42);
    for (int i = 0; i < 5; ++i) {
      CHECK(a[i].q1 == b[i].q1);
      CHECK(std::norm(a[i].q2[0]) + std::norm(a[i].q2[1]) == doctest::Approx(1.0));
    }
    CHECK(haar_logical_inputs(1, 43)[0].q1 != a[0].q1);
    CHECK_THROWS_AS(haar_logical_inputs(0, 1), NumericalError);
    CHECK_THROWS_AS(average_gate_fidelity(pair, m, ideal, s, std::vector<LogicalProduct>{}), NumericalError);

    const GateSchedule eff4 = GateSchedule::from_model(m, Engine::Eff4);
    const LogicalProduct forced;  // |phi_e phi_e g'>
    const StateVector in = logical_product_state(pair, s, forced);
    const EvolutionResult out = run_engine(in, m, eff4);
    REQUIRE(out.ok);
    const double single = fidelity(*out.psi, ideal_ccz_output(pair, s, forced));
    CHECK(average_gate_fidelity(pair, m, eff4, s, {forced}) == doctest::Approx(single).epsilon(1e-14));
  }
}
