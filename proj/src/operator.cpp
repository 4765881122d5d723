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

#include "cczsim/operator.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <string>
#include <vector>

#include "cczsim/error.hpp"

namespace ccz {

Level parse_level(std::string_view name) {
  if (name == "g'" || name == "gp" || name == "g_prime" || name == "gprime") return Level::GPrime;
  if (name == "g") return Level::G;
  if (name == "e") return Level::E;
  if (name == "f") return Level::F;
  throw UnknownLevel("unknown ququart level '" + std::string(name) + "'");
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::GPrime: return "g'";
    case Level::G: return "g";
    case Level::E: return "e";
    case Level::F: return "f";
  }
  return "?";
}

std::string_view to_string(Subsystem which) {
  switch (which) {
    case Subsystem::Cavity1: return "cavity1";
    case Subsystem::Cavity2: return "cavity2";
    case Subsystem::Atom: return "atom";
  }
  return "?";
}

CompositeSpace::CompositeSpace(int cavity1_dim, int cavity2_dim)
    : cavity1_dim_(cavity1_dim), cavity2_dim_(cavity2_dim) {
  if (cavity1_dim < 1 || cavity2_dim < 1) {
    throw InvalidDimension("cavity truncations must be positive (got " +
                           std::to_string(cavity1_dim) + ", " +
                           std::to_string(cavity2_dim) + ")");
  }
}

int CompositeSpace::dim(Subsystem which) const noexcept {
  switch (which) {
    case Subsystem::Cavity1: return cavity1_dim_;
    case Subsystem::Cavity2: return cavity2_dim_;
    case Subsystem::Atom: return kAtomDim;
  }
  return 0;
}

int CompositeSpace::index(int n1, int n2, Level level) const {
  const int l = static_cast<int>(level);
  if (n1 < 0 || n1 >= cavity1_dim_ || n2 < 0 || n2 >= cavity2_dim_ || l < 0 || l >= kAtomDim) {
    throw InvalidDimension("basis label (" + std::to_string(n1) + ", " + std::to_string(n2) +
                           ", " + std::string(to_string(level)) + ") outside the truncated space");
  }
  return ((n1 * cavity2_dim_) + n2) * kAtomDim + l;
}

BasisLabel CompositeSpace::label(int flat) const {
  if (flat < 0 || flat >= dimension()) {
    throw InvalidDimension("flat index " + std::to_string(flat) + " out of range");
  }
  const int level = flat % kAtomDim;
  const int rest = flat / kAtomDim;
  return {rest / cavity2_dim_, rest % cavity2_dim_, static_cast<Level>(level)};
}

void require_same_space(const CompositeSpace& a, const CompositeSpace& b) {
  if (!(a == b)) {
    throw SpaceMismatch("operands live on different spaces (" + std::to_string(a.cavity1_dim()) +
                        "x" + std::to_string(a.cavity2_dim()) + "x4 vs " +
                        std::to_string(b.cavity1_dim()) + "x" + std::to_string(b.cavity2_dim()) +
                        "x4)");
  }
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(CompositeSpace space, SparseMatrix matrix)
    : space_(space), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.dimension() || matrix_.cols() != space_.dimension()) {
    throw SpaceMismatch("operator matrix is " + std::to_string(matrix_.rows()) + "x" +
                        std::to_string(matrix_.cols()) + ", space dimension is " +
                        std::to_string(space_.dimension()));
  }
  matrix_.makeCompressed();
}

Operator Operator::zero(const CompositeSpace& space) {
  return Operator(space, SparseMatrix(space.dimension(), space.dimension()));
}

Operator Operator::identity(const CompositeSpace& space) {
  SparseMatrix id(space.dimension(), space.dimension());
  id.setIdentity();
  return Operator(space, std::move(id));
}

cplx Operator::element(const BasisLabel& row, const BasisLabel& col) const {
  return matrix_.coeff(space_.index(row), space_.index(col));
}

Operator Operator::dagger() const {
  return Operator(space_, SparseMatrix(matrix_.adjoint()));
}

double Operator::hermiticity_error() const {
  const SparseMatrix diff = matrix_ - SparseMatrix(matrix_.adjoint());
  double worst = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

double Operator::max_abs_diff(const Operator& other) const {
  require_same_space(space_, other.space_);
  const SparseMatrix diff = matrix_ - other.matrix_;
  double worst = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

StateVector Operator::apply(const StateVector& psi) const {
  require_same_space(space_, psi.space());
  return StateVector(space_, matrix_ * psi.amplitudes());
}

Operator Operator::operator+(const Operator& rhs) const {
  require_same_space(space_, rhs.space_);
  return Operator(space_, matrix_ + rhs.matrix_);
}

Operator Operator::operator-(const Operator& rhs) const {
  require_same_space(space_, rhs.space_);
  return Operator(space_, matrix_ - rhs.matrix_);
}

Operator Operator::operator*(const Operator& rhs) const {
  require_same_space(space_, rhs.space_);
  return Operator(space_, SparseMatrix(matrix_ * rhs.matrix_));
}

Operator Operator::scaled(cplx factor) const {
  return Operator(space_, SparseMatrix(matrix_ * factor));
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(CompositeSpace space, Vector amplitudes)
    : space_(space), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.dimension()) {
    throw SpaceMismatch("state has " + std::to_string(amplitudes_.size()) +
                        " amplitudes, space dimension is " + std::to_string(space_.dimension()));
  }
}

StateVector StateVector::basis(const CompositeSpace& space, const BasisLabel& label) {
  Vector v = Vector::Zero(space.dimension());
  v[space.index(label)] = 1.0;
  return StateVector(space, std::move(v));
}

StateVector StateVector::zero(const CompositeSpace& space) {
  return StateVector(space, Vector::Zero(space.dimension()));
}

StateVector StateVector::product(const CompositeSpace& space, const Vector& cavity1,
                                 const Vector& cavity2, const Vector& atom) {
  if (cavity1.size() != space.cavity1_dim() || cavity2.size() != space.cavity2_dim() ||
      atom.size() != kAtomDim) {
    throw SpaceMismatch("product-state factor sizes do not match the composite space");
  }
  Vector v(space.dimension());
  for (int n1 = 0; n1 < space.cavity1_dim(); ++n1) {
    for (int n2 = 0; n2 < space.cavity2_dim(); ++n2) {
      for (int l = 0; l < kAtomDim; ++l) {
        v[space.index(n1, n2, static_cast<Level>(l))] = cavity1[n1] * cavity2[n2] * atom[l];
      }
    }
  }
  return StateVector(space, std::move(v));
}

StateVector& StateVector::normalize() {
  const double n = amplitudes_.norm();
  if (n == 0.0) throw NumericalError("cannot normalize the zero vector");
  amplitudes_ /= n;
  return *this;
}

cplx StateVector::inner(const StateVector& other) const {
  require_same_space(space_, other.space_);
  return amplitudes_.dot(other.amplitudes_);  // Eigen conjugates the left operand
}

StateVector StateVector::operator+(const StateVector& rhs) const {
  require_same_space(space_, rhs.space_);
  return StateVector(space_, amplitudes_ + rhs.amplitudes_);
}

StateVector StateVector::scaled(cplx factor) const {
  return StateVector(space_, amplitudes_ * factor);
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(CompositeSpace space, DenseMatrix rho)
    : space_(space), rho_(std::move(rho)) {
  if (rho_.rows() != space_.dimension() || rho_.cols() != space_.dimension()) {
    throw SpaceMismatch("density matrix is " + std::to_string(rho_.rows()) + "x" +
                        std::to_string(rho_.cols()) + ", space dimension is " +
                        std::to_string(space_.dimension()));
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const Vector& a = psi.amplitudes();
  return DensityMatrix(psi.space(), a * a.adjoint());
}

double DensityMatrix::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::MatrixXcd h = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityMatrix::hermitize() {
  DenseMatrix h = 0.5 * (rho_ + rho_.adjoint());
  rho_ = std::move(h);
}

void DensityMatrix::validate(double trace_tol, double hermiticity_tol,
                             double negativity_floor) const {
  const cplx tr = trace();
  if (std::abs(tr - 1.0) > trace_tol) {
    throw NumericalError("density matrix trace " + std::to_string(tr.real()) +
                         " deviates from 1 by more than " + std::to_string(trace_tol));
  }
  const double herm = hermiticity_error();
  if (herm > hermiticity_tol) {
    throw NumericalError("density matrix Hermiticity error " + std::to_string(herm));
  }
  const double lo = min_eigenvalue();
  if (lo < negativity_floor) {
    throw NumericalError("density matrix eigenvalue " + std::to_string(lo) +
                         " below floor " + std::to_string(negativity_floor));
  }
}

// ---------------------------------------------------------------------------
// Builders

SparseMatrix annihilation(int dim) {
  if (dim < 2) throw InvalidDimension("annihilation operator needs dim >= 2, got " + std::to_string(dim));
  std::vector<Eigen::Triplet<cplx>> t;
  t.reserve(dim - 1);
  for (int n = 1; n < dim; ++n) t.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
  SparseMatrix a(dim, dim);
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

SparseMatrix number_operator(int dim) {
  if (dim < 1) throw InvalidDimension("number operator needs dim >= 1");
  std::vector<Eigen::Triplet<cplx>> t;
  for (int n = 1; n < dim; ++n) t.emplace_back(n, n, static_cast<double>(n));
  SparseMatrix m(dim, dim);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SparseMatrix local_identity(int dim) {
  if (dim < 1) throw InvalidDimension("identity needs dim >= 1");
  SparseMatrix id(dim, dim);
  id.setIdentity();
  return id;
}

SparseMatrix level_transition(Level from, Level to) {
  SparseMatrix m(kAtomDim, kAtomDim);
  m.insert(static_cast<int>(to), static_cast<int>(from)) = 1.0;
  m.makeCompressed();
  return m;
}

SparseMatrix level_transition(std::string_view from, std::string_view to) {
  return level_transition(parse_level(from), parse_level(to));
}

SparseMatrix level_projector(Level level) { return level_transition(level, level); }

Operator lift(const SparseMatrix& local, Subsystem which, const CompositeSpace& space) {
  const int d = space.dim(which);
  if (local.rows() != d || local.cols() != d) {
    throw InvalidDimension("cannot lift a " + std::to_string(local.rows()) + "x" +
                           std::to_string(local.cols()) + " matrix onto " +
                           std::string(to_string(which)) + " of dimension " + std::to_string(d));
  }
  const int total = space.dimension();
  std::vector<Eigen::Triplet<cplx>> t;
  t.reserve(static_cast<size_t>(local.nonZeros()) * (total / d));
  for (int idx = 0; idx < total; ++idx) {
    const BasisLabel col = space.label(idx);
    const int local_col = which == Subsystem::Cavity1   ? col.n1
                          : which == Subsystem::Cavity2 ? col.n2
                                                        : static_cast<int>(col.level);
    // Column local_col of the local matrix, scanned over its rows.
    for (int r = 0; r < d; ++r) {
      const cplx v = local.coeff(r, local_col);
      if (v == cplx(0.0)) continue;
      BasisLabel row = col;
      switch (which) {
        case Subsystem::Cavity1: row.n1 = r; break;
        case Subsystem::Cavity2: row.n2 = r; break;
        case Subsystem::Atom: row.level = static_cast<Level>(r); break;
      }
      t.emplace_back(space.index(row), idx, v);
    }
  }
  SparseMatrix m(total, total);
  m.setFromTriplets(t.begin(), t.end());
  return Operator(space, std::move(m));
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

cplx expectation(const Operator& op, const StateVector& psi) {
  require_same_space(op.space(), psi.space());
  return psi.amplitudes().dot(op.matrix() * psi.amplitudes());
}

cplx expectation(const Operator& op, const DensityMatrix& rho) {
  require_same_space(op.space(), rho.space());
  // tr(op rho) = sum_ij op_ij rho_ji
  cplx acc = 0.0;
  const SparseMatrix& m = op.matrix();
  for (int r = 0; r < m.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      acc += it.value() * rho.matrix()(it.col(), it.row());
    }
  }
  return acc;
}

DensityMatrix outer(const StateVector& psi) { return DensityMatrix::from_pure(psi); }

cplx trace(const Operator& op) {
  cplx acc = 0.0;
  for (int i = 0; i < op.dimension(); ++i) acc += op.matrix().coeff(i, i);
  return acc;
}

namespace {

template <typename Weight>
double accumulate_population(const CompositeSpace& space, Weight&& weight,
                             const std::function<bool(const BasisLabel&)>& pick) {
  double acc = 0.0;
  for (int i = 0; i < space.dimension(); ++i) {
    if (pick(space.label(i))) acc += weight(i);
  }
  return acc;
}

int photons(const BasisLabel& l, Subsystem cavity) {
  return cavity == Subsystem::Cavity1 ? l.n1 : l.n2;
}

void require_cavity(Subsystem which) {
  if (which == Subsystem::Atom) throw InvalidDimension("fock population requested for the ququart");
}

}  // namespace

double fock_population(const StateVector& psi, Subsystem cavity, int n) {
  require_cavity(cavity);
  return accumulate_population(
      psi.space(), [&](int i) { return std::norm(psi.amplitudes()[i]); },
      [&](const BasisLabel& l) { return photons(l, cavity) == n; });
}

double fock_population(const DensityMatrix& rho, Subsystem cavity, int n) {
  require_cavity(cavity);
  return accumulate_population(
      rho.space(), [&](int i) { return rho.matrix()(i, i).real(); },
      [&](const BasisLabel& l) { return photons(l, cavity) == n; });
}

double level_population(const StateVector& psi, Level level) {
  return accumulate_population(
      psi.space(), [&](int i) { return std::norm(psi.amplitudes()[i]); },
      [&](const BasisLabel& l) { return l.level == level; });
}

double level_population(const DensityMatrix& rho, Level level) {
  return accumulate_population(
      rho.space(), [&](int i) { return rho.matrix()(i, i).real(); },
      [&](const BasisLabel& l) { return l.level == level; });
}

namespace {

template <typename Weight>
FockLeakage leakage_of(const CompositeSpace& space, Weight&& weight) {
  FockLeakage out;
  const int top1 = space.cavity1_dim() - 2;
  const int top2 = space.cavity2_dim() - 2;
  for (int i = 0; i < space.dimension(); ++i) {
    const BasisLabel l = space.label(i);
    if (l.n1 >= top1) out.cavity1 += weight(i);
    if (l.n2 >= top2) out.cavity2 += weight(i);
  }
  return out;
}

}  // namespace

FockLeakage top_fock_leakage(const DensityMatrix& rho) {
  return leakage_of(rho.space(), [&](int i) { return rho.matrix()(i, i).real(); });
}

FockLeakage top_fock_leakage(const StateVector& psi) {
  return leakage_of(psi.space(), [&](int i) { return std::norm(psi.amplitudes()[i]); });
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_space(a.space(), b.space());
  Eigen::MatrixXcd d = a.matrix() - b.matrix();
  d = 0.5 * (d + d.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace ccz
