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

#include "cczsim/encodings.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cczsim/error.hpp"

namespace ccz {

namespace {

bool odd_index(Eigen::Index n) { return (n % 2) != 0; }

}  // namespace

ParityState::ParityState(Vector coefficients, Parity parity)
    : coefficients_(std::move(coefficients)), parity_(parity) {
  for (Eigen::Index n = 0; n < coefficients_.size(); ++n) {
    const bool wrong = (parity_ == Parity::Even) == odd_index(n);
    if (wrong && coefficients_[n] != cplx(0.0)) {
      throw NotAnEigenstate("coefficient on |" + std::to_string(n) +
                            "> violates the declared parity");
    }
  }
  const double norm = coefficients_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    throw NotAnEigenstate("parity state norm " + std::to_string(norm) + " is not 1");
  }
}

double cat_normalization(double alpha, Parity parity) {
  const double overlap = std::exp(-2.0 * alpha * alpha);
  const double s = parity == Parity::Even ? 1.0 + overlap : 1.0 - overlap;
  return 1.0 / std::sqrt(2.0 * s);
}

SparseMatrix parity_operator(int dim) {
  if (dim < 1) throw InvalidDimension("parity operator needs dim >= 1");
  SparseMatrix p(dim, dim);
  for (int n = 0; n < dim; ++n) p.insert(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  p.makeCompressed();
  return p;
}

LogicalPair fock_pair(int m, int n, int dim) {
  if (m < 0 || n < 0) throw InvalidDimension("Fock indices must be non-negative");
  if (2 * m >= dim || 2 * n + 1 >= dim) {
    throw InvalidDimension("Fock pair (|" + std::to_string(2 * m) + ">, |" +
                           std::to_string(2 * n + 1) + ">) exceeds truncation " +
                           std::to_string(dim));
  }
  Vector e = Vector::Zero(dim);
  Vector o = Vector::Zero(dim);
  e[2 * m] = 1.0;
  o[2 * n + 1] = 1.0;
  return {ParityState(std::move(e), Parity::Even), ParityState(std::move(o), Parity::Odd)};
}

int required_cat_dim(double alpha, double tail_tolerance) {
  // Poisson weights of |alpha>, split by parity: each cat keeps the weights of
  // its own parity scaled by 1 / P(parity).
  const double mean = alpha * alpha;
  const double even_total = 0.5 * (1.0 + std::exp(-2.0 * mean));
  const double odd_total = 1.0 - even_total;
  double weight = std::exp(-mean);
  double even_seen = 0.0;
  double odd_seen = 0.0;
  for (int n = 0; n < 400; ++n) {
    (n % 2 == 0 ? even_seen : odd_seen) += weight;
    const double even_tail = std::max(0.0, 1.0 - even_seen / even_total);
    const double odd_tail = std::max(0.0, 1.0 - odd_seen / odd_total);
    if (n >= 1 && even_tail < tail_tolerance && odd_tail < tail_tolerance) return n + 1;
    weight *= mean / (n + 1);
  }
  throw TruncationError("coherent amplitude too large", 400);
}

LogicalPair cat_pair(const CatSpec& spec) {
  if (!(spec.alpha > 0.0)) throw InvalidDimension("cat amplitude must be positive");
  const int need = required_cat_dim(spec.alpha, spec.tail_tolerance);
  if (spec.dim < need) {
    throw TruncationError("cat amplitude " + std::to_string(spec.alpha) + " needs truncation >= " +
                              std::to_string(need) + " (got " + std::to_string(spec.dim) + ")",
                          need);
  }
  // e^{-a^2/2} a^n / sqrt(n!) (1 +- (-1)^n), renormalized on the truncated space.
  Vector even = Vector::Zero(spec.dim);
  Vector odd = Vector::Zero(spec.dim);
  double term = std::exp(-0.5 * spec.alpha * spec.alpha);
  for (int n = 0; n < spec.dim; ++n) {
    if (n % 2 == 0) {
      even[n] = 2.0 * term;
    } else {
      odd[n] = 2.0 * term;
    }
    term *= spec.alpha / std::sqrt(static_cast<double>(n + 1));
  }
  even /= even.norm();
  odd /= odd.norm();
  return {ParityState(std::move(even), Parity::Even), ParityState(std::move(odd), Parity::Odd)};
}

Parity validate_parity(const Vector& state) {
  const double norm = state.norm();
  if (norm == 0.0) throw NotAnEigenstate("zero vector has no parity");
  double even_mass = 0.0;
  double odd_mass = 0.0;
  for (Eigen::Index n = 0; n < state.size(); ++n) {
    (odd_index(n) ? odd_mass : even_mass) += std::norm(state[n]);
  }
  // ||P psi - psi|| = 2 sqrt(odd mass) and ||P psi + psi|| = 2 sqrt(even mass).
  const double plus_residual = 2.0 * std::sqrt(odd_mass) / norm;
  const double minus_residual = 2.0 * std::sqrt(even_mass) / norm;
  if (plus_residual < 1e-10) return Parity::Even;
  if (minus_residual < 1e-10) return Parity::Odd;
  throw NotAnEigenstate("state mixes parities (even weight " + std::to_string(even_mass) +
                        ", odd weight " + std::to_string(odd_mass) + ")");
}

ParityState make_parity_state(Vector coefficients) {
  const Parity p = validate_parity(coefficients);
  coefficients /= coefficients.norm();
  // Residual wrong-parity noise below the validation threshold is cleared so
  // the exact-zero invariant holds.
  for (Eigen::Index n = 0; n < coefficients.size(); ++n) {
    if ((p == Parity::Even) == odd_index(n)) coefficients[n] = 0.0;
  }
  coefficients /= coefficients.norm();
  return ParityState(std::move(coefficients), p);
}

Vector embed(const ParityState& state, int dim) {
  const Vector& c = state.coefficients();
  if (c.size() > dim) {
    for (Eigen::Index n = dim; n < c.size(); ++n) {
      if (c[n] != cplx(0.0)) {
        throw TruncationError("logical state has support above truncation " + std::to_string(dim),
                              static_cast<int>(c.size()));
      }
    }
    return c.head(dim);
  }
  Vector out = Vector::Zero(dim);
  out.head(c.size()) = c;
  return out;
}

}  // namespace ccz
