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

#include <complex>
#include <string_view>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ccz {

using cplx = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;
using DenseMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXcd;

inline constexpr int kAtomDim = 4;

// Ququart levels in index order.
enum class Level : int { GPrime = 0, G = 1, E = 2, F = 3 };

enum class Subsystem { Cavity1, Cavity2, Atom };

// Accepts "g'", "gp", "g_prime", "g", "e", "f".
Level parse_level(std::string_view name);
std::string_view to_string(Level level);
std::string_view to_string(Subsystem which);

struct BasisLabel {
  int n1;
  int n2;
  Level level;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// cavity1 (x) cavity2 (x) ququart with flat index ((n1 * N2) + n2) * 4 + level.
class CompositeSpace {
 public:
  CompositeSpace(int cavity1_dim, int cavity2_dim);

  int cavity1_dim() const noexcept { return cavity1_dim_; }
  int cavity2_dim() const noexcept { return cavity2_dim_; }
  int atom_dim() const noexcept { return kAtomDim; }
  int dim(Subsystem which) const noexcept;
  int dimension() const noexcept { return cavity1_dim_ * cavity2_dim_ * kAtomDim; }

  int index(int n1, int n2, Level level) const;
  int index(const BasisLabel& label) const { return index(label.n1, label.n2, label.level); }
  BasisLabel label(int flat) const;

  friend bool operator==(const CompositeSpace&, const CompositeSpace&) = default;

 private:
  int cavity1_dim_;
  int cavity2_dim_;
};

void require_same_space(const CompositeSpace& a, const CompositeSpace& b);

class StateVector;
class DensityMatrix;

// Sparse operator on a composite space. Immutable value type.
class Operator {
 public:
  Operator(CompositeSpace space, SparseMatrix matrix);

  static Operator zero(const CompositeSpace& space);
  static Operator identity(const CompositeSpace& space);

  const CompositeSpace& space() const noexcept { return space_; }
  const SparseMatrix& matrix() const noexcept { return matrix_; }
  int dimension() const noexcept { return space_.dimension(); }

  cplx element(int row, int col) const { return matrix_.coeff(row, col); }
  cplx element(const BasisLabel& row, const BasisLabel& col) const;

  Operator dagger() const;
  DenseMatrix dense() const { return DenseMatrix(matrix_); }
  double hermiticity_error() const;
  bool is_hermitian(double tol) const { return hermiticity_error() <= tol; }
  // Largest |entry| of this - other.
  double max_abs_diff(const Operator& other) const;

  StateVector apply(const StateVector& psi) const;

  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  Operator operator*(const Operator& rhs) const;
  Operator scaled(cplx factor) const;

 private:
  CompositeSpace space_;
  SparseMatrix matrix_;
};

inline Operator operator*(cplx factor, const Operator& op) { return op.scaled(factor); }

class StateVector {
 public:
  StateVector(CompositeSpace space, Vector amplitudes);

  static StateVector basis(const CompositeSpace& space, const BasisLabel& label);
  static StateVector zero(const CompositeSpace& space);
  // Product state from a cavity-1 ket, cavity-2 ket and 4-component atom ket.
  static StateVector product(const CompositeSpace& space, const Vector& cavity1,
                             const Vector& cavity2, const Vector& atom);

  const CompositeSpace& space() const noexcept { return space_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }
  Vector& amplitudes() noexcept { return amplitudes_; }
  cplx amplitude(const BasisLabel& label) const { return amplitudes_[space_.index(label)]; }

  double norm() const { return amplitudes_.norm(); }
  // Throws NumericalError on a zero vector.
  StateVector& normalize();
  cplx inner(const StateVector& other) const;  // <this|other>

  StateVector operator+(const StateVector& rhs) const;
  StateVector scaled(cplx factor) const;

 private:
  CompositeSpace space_;
  Vector amplitudes_;
};

class DensityMatrix {
 public:
  DensityMatrix(CompositeSpace space, DenseMatrix rho);

  static DensityMatrix from_pure(const StateVector& psi);

  const CompositeSpace& space() const noexcept { return space_; }
  const DenseMatrix& matrix() const noexcept { return rho_; }
  DenseMatrix& matrix() noexcept { return rho_; }

  cplx trace() const { return rho_.trace(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;
  void hermitize();
  // Throws NumericalError when trace, Hermiticity or positivity fail.
  void validate(double trace_tol = 1e-6, double hermiticity_tol = 1e-8,
                double negativity_floor = -1e-6) const;

 private:
  CompositeSpace space_;
  DenseMatrix rho_;
};

// Single-subsystem matrices.
SparseMatrix annihilation(int dim);
SparseMatrix number_operator(int dim);
SparseMatrix local_identity(int dim);
// |to><from| on the ququart.
SparseMatrix level_transition(Level from, Level to);
SparseMatrix level_transition(std::string_view from, std::string_view to);
SparseMatrix level_projector(Level level);

// Tensor the local matrix with identities on the other two subsystems.
Operator lift(const SparseMatrix& local, Subsystem which, const CompositeSpace& space);

Operator commutator(const Operator& a, const Operator& b);
cplx expectation(const Operator& op, const StateVector& psi);
cplx expectation(const Operator& op, const DensityMatrix& rho);
DensityMatrix outer(const StateVector& psi);
cplx trace(const Operator& op);

// Probability that the given cavity holds exactly n photons.
double fock_population(const StateVector& psi, Subsystem cavity, int n);
double fock_population(const DensityMatrix& rho, Subsystem cavity, int n);
double level_population(const StateVector& psi, Level level);
double level_population(const DensityMatrix& rho, Level level);
// Population in the two highest Fock levels of each cavity.
struct FockLeakage {
  double cavity1 = 0.0;
  double cavity2 = 0.0;
  double worst() const noexcept { return cavity1 > cavity2 ? cavity1 : cavity2; }
};
FockLeakage top_fock_leakage(const DensityMatrix& rho);
FockLeakage top_fock_leakage(const StateVector& psi);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace ccz
