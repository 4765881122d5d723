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

#include "cczsim/lindblad.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "cczsim/error.hpp"

namespace ccz {

double LindbladModel::total_rate() const {
  double sum = 0.0;
  for (const auto& c : channels) sum += c.rate;
  return sum;
}

void LindbladModel::validate() const {
  for (const auto& c : channels) {
    require_same_space(space(), c.op.space());
    if (!(c.rate >= 0.0)) throw NumericalError("channel '" + c.name + "' has a negative rate");
  }
}

std::vector<CollapseChannel> decoherence_channels(const CompositeSpace& space,
                                                  const DecoherenceRates& r) {
  std::vector<CollapseChannel> out;
  auto push = [&](std::string name, double rate, Operator op) {
    if (rate > 0.0) out.push_back({std::move(name), std::move(op), rate});
  };
  auto lowering = [&](Level from, Level to) {
    return lift(level_transition(from, to), Subsystem::Atom, space);
  };
  push("kappa1", r.kappa1, lift(annihilation(space.cavity1_dim()), Subsystem::Cavity1, space));
  push("kappa2", r.kappa2, lift(annihilation(space.cavity2_dim()), Subsystem::Cavity2, space));
  push("gamma_fe", r.gamma_fe, lowering(Level::F, Level::E));
  push("gamma_fg", r.gamma_fg, lowering(Level::F, Level::G));
  push("gamma_fg_prime", r.gamma_fg_prime, lowering(Level::F, Level::GPrime));
  push("gamma_eg", r.gamma_eg, lowering(Level::E, Level::G));
  push("gamma_eg_prime", r.gamma_eg_prime, lowering(Level::E, Level::GPrime));
  push("gamma_gg_prime", r.gamma_gg_prime, lowering(Level::G, Level::GPrime));
  push("gamma_f_phi", r.gamma_f_phi, lift(level_projector(Level::F), Subsystem::Atom, space));
  push("gamma_e_phi", r.gamma_e_phi, lift(level_projector(Level::E), Subsystem::Atom, space));
  push("gamma_g_phi", r.gamma_g_phi, lift(level_projector(Level::G), Subsystem::Atom, space));
  return out;
}

double fastest_frequency(const Hamiltonian& h, double total_rate) {
  return std::max({h.max_frequency(), h.norm_bound(), total_rate}) / kTwoPi;
}

double automatic_step(const Hamiltonian& h, double total_rate, double steps_per_period) {
  const double f = fastest_frequency(h, total_rate);
  if (f == 0.0) return 0.0;
  return 1.0 / (steps_per_period * f);
}

double EvolutionResult::max_trace_error() const {
  double m = 0.0;
  for (const auto& p : timeline) m = std::max(m, p.trace_error);
  return m;
}

double EvolutionResult::max_hermiticity_error() const {
  double m = 0.0;
  for (const auto& p : timeline) m = std::max(m, p.hermiticity_error);
  return m;
}

double EvolutionResult::lowest_eigenvalue() const {
  double m = timeline.empty() ? 0.0 : timeline.front().min_eigenvalue;
  for (const auto& p : timeline) m = std::min(m, p.min_eigenvalue);
  return m;
}

double EvolutionResult::max_norm_error() const {
  double m = 0.0;
  for (const auto& p : timeline) m = std::max(m, p.norm_error);
  return m;
}

FockLeakage EvolutionResult::max_leakage() const {
  FockLeakage m;
  for (const auto& p : timeline) {
    m.cavity1 = std::max(m.cavity1, p.leakage.cavity1);
    m.cavity2 = std::max(m.cavity2, p.leakage.cavity2);
  }
  return m;
}

DenseMatrix liouvillian_apply(const DensityMatrix& rho, double t, const LindbladModel& model) {
  require_same_space(rho.space(), model.space());
  const SparseMatrix h = model.hamiltonian.at(t).matrix();
  const DenseMatrix& r = rho.matrix();
  const cplx minus_i(0.0, -1.0);
  DenseMatrix out = minus_i * (DenseMatrix(h * r) - DenseMatrix(r * h));
  for (const auto& c : model.channels) {
    require_same_space(rho.space(), c.op.space());
    const SparseMatrix& l = c.op.matrix();
    const SparseMatrix ldag = l.adjoint();
    const SparseMatrix ldl = ldag * l;
    const DenseMatrix lr = l * r;
    const DenseMatrix jump = (lr * ldag).eval();
    out += c.rate * (jump - 0.5 * DenseMatrix(ldl * r) - 0.5 * DenseMatrix(r * ldl));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Phased sparse matrix: the union pattern of all terms, refilled at each time.

namespace {

class PhasedCsr {
 public:
  PhasedCsr(int dim, const Hamiltonian& h, const SparseMatrix& static_part, cplx scale)
      : dim_(dim), scale_(scale) {
    std::vector<Eigen::Triplet<double>> pattern;
    auto collect = [&](const SparseMatrix& m) {
      for (int r = 0; r < m.outerSize(); ++r) {
        for (SparseMatrix::InnerIterator it(m, r); it; ++it) pattern.emplace_back(it.row(), it.col(), 1.0);
      }
    };
    for (const auto& term : h.terms()) collect(term.op.matrix());
    collect(static_part);
    Eigen::SparseMatrix<double, Eigen::RowMajor> p(dim, dim);
    p.setFromTriplets(pattern.begin(), pattern.end());
    p.makeCompressed();
    row_ptr_.assign(p.outerIndexPtr(), p.outerIndexPtr() + dim + 1);
    cols_.assign(p.innerIndexPtr(), p.innerIndexPtr() + p.nonZeros());
    static_values_.assign(cols_.size(), cplx(0.0));
    values_.resize(cols_.size());

    auto slot_of = [&](int row, int col) {
      const auto first = cols_.begin() + row_ptr_[row];
      const auto last = cols_.begin() + row_ptr_[row + 1];
      return static_cast<int>(std::lower_bound(first, last, col) - cols_.begin());
    };
    for (std::size_t k = 0; k < h.terms().size(); ++k) {
      const auto& term = h.terms()[k];
      frequencies_.push_back(term.frequency);
      amplitudes_.push_back(term.amplitude * scale_);
      const SparseMatrix& m = term.op.matrix();
      for (int r = 0; r < m.outerSize(); ++r) {
        for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
          contributions_.push_back({slot_of(static_cast<int>(it.row()), static_cast<int>(it.col())),
                                    static_cast<int>(k), it.value()});
        }
      }
    }
    for (int r = 0; r < static_part.outerSize(); ++r) {
      for (SparseMatrix::InnerIterator it(static_part, r); it; ++it) {
        static_values_[slot_of(static_cast<int>(it.row()), static_cast<int>(it.col()))] += scale_ * it.value();
      }
    }
    coefficients_.resize(frequencies_.size());
  }

  void fill(double t) {
    if (filled_ && t == filled_at_) return;
    filled_ = true;
    filled_at_ = t;
    for (std::size_t k = 0; k < frequencies_.size(); ++k) {
      coefficients_[k] = frequencies_[k] == 0.0 ? amplitudes_[k]
                                                : amplitudes_[k] * std::polar(1.0, -frequencies_[k] * t);
    }
    std::copy(static_values_.begin(), static_values_.end(), values_.begin());
    for (const auto& c : contributions_) values_[c.slot] += coefficients_[c.term] * c.value;
  }

  int dim() const noexcept { return dim_; }
  const std::vector<int>& row_ptr() const noexcept { return row_ptr_; }
  const std::vector<int>& cols() const noexcept { return cols_; }
  const std::vector<cplx>& values() const noexcept { return values_; }

  // y = A x
  void multiply(const cplx* x, cplx* y) const {
    for (int i = 0; i < dim_; ++i) {
      cplx acc = 0.0;
      for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) acc += values_[p] * x[cols_[p]];
      y[i] = acc;
    }
  }

 private:
  struct Contribution {
    int slot;
    int term;
    cplx value;
  };

  int dim_;
  cplx scale_;
  bool filled_ = false;
  double filled_at_ = 0.0;
  std::vector<int> row_ptr_;
  std::vector<int> cols_;
  std::vector<cplx> static_values_;
  std::vector<cplx> values_;
  std::vector<double> frequencies_;
  std::vector<cplx> amplitudes_;
  std::vector<cplx> coefficients_;
  std::vector<Contribution> contributions_;
};

bool is_diagonal(const SparseMatrix& m) {
  for (int r = 0; r < m.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      if (it.row() != it.col()) return false;
    }
  }
  return true;
}

bool at_most_one_per_row(const SparseMatrix& m) {
  for (int r = 0; r < m.outerSize(); ++r) {
    if (m.outerIndexPtr()[r + 1] - m.outerIndexPtr()[r] > 1) return false;
  }
  return true;
}

// Stretch of nonzeros whose rows and columns both advance by one.
struct Run {
  int first;
  int length;
};

struct MonomialChannel {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<cplx> coef;  // sqrt(rate) * value
  std::vector<cplx> conj_coef;
  std::vector<Run> runs;

  void finish() {
    conj_coef.resize(coef.size());
    for (std::size_t q = 0; q < coef.size(); ++q) conj_coef[q] = std::conj(coef[q]);
    for (int q = 0; q < static_cast<int>(rows.size()); ++q) {
      if (!runs.empty()) {
        Run& last = runs.back();
        const int tail = last.first + last.length - 1;
        if (rows[q] == rows[tail] + 1 && cols[q] == cols[tail] + 1) {
          ++last.length;
          continue;
        }
      }
      runs.push_back({q, 1});
    }
  }

  bool contiguous() const { return !runs.empty() && rows.size() >= 4 * runs.size(); }
};

}  // namespace

struct LiouvillianKernel::Impl {
  const kernels::KernelTable* table;
  int dim;
  PhasedCsr k_minus_i;  // -i K
  std::vector<cplx> diagonal_weights;  // sum over diagonal channels of rate d_i conj(d_j)
  bool has_diagonal = false;
  std::vector<MonomialChannel> monomials;
  std::vector<std::pair<double, SparseMatrix>> general;
  std::vector<cplx> scratch;

  static SparseMatrix decay_part(const LindbladModel& model) {
    const int d = model.space().dimension();
    SparseMatrix gamma(d, d);
    for (const auto& c : model.channels) {
      const SparseMatrix& l = c.op.matrix();
      gamma += (c.rate * cplx(0.0, -0.5)) * SparseMatrix(SparseMatrix(l.adjoint()) * l);
    }
    return gamma;
  }

  Impl(const LindbladModel& model, const kernels::KernelTable& t)
      : table(&t),
        dim(model.space().dimension()),
        k_minus_i(model.space().dimension(), model.hamiltonian, decay_part(model), cplx(0.0, -1.0)) {
    const std::size_t n = static_cast<std::size_t>(dim) * dim;
    scratch.assign(n, cplx(0.0));
    diagonal_weights.assign(n, cplx(0.0));
    for (const auto& c : model.channels) {
      if (c.rate == 0.0) continue;
      const SparseMatrix& l = c.op.matrix();
      if (is_diagonal(l)) {
        std::vector<cplx> diag(dim, cplx(0.0));
        for (int r = 0; r < l.outerSize(); ++r) {
          for (SparseMatrix::InnerIterator it(l, r); it; ++it) diag[r] = it.value();
        }
        for (int i = 0; i < dim; ++i) {
          if (diag[i] == cplx(0.0)) continue;
          for (int j = 0; j < dim; ++j) diagonal_weights[static_cast<std::size_t>(i) * dim + j] += c.rate * diag[i] * std::conj(diag[j]);
        }
        has_diagonal = true;
      } else if (at_most_one_per_row(l)) {
        MonomialChannel m;
        const double root = std::sqrt(c.rate);
        for (int r = 0; r < l.outerSize(); ++r) {
          for (SparseMatrix::InnerIterator it(l, r); it; ++it) {
            m.rows.push_back(static_cast<int>(it.row()));
            m.cols.push_back(static_cast<int>(it.col()));
            m.coef.push_back(root * it.value());
          }
        }
        m.finish();
        monomials.push_back(std::move(m));
      } else {
        general.emplace_back(c.rate, l);
      }
    }
  }

  void apply(double t, const cplx* rho, cplx* out) {
    const std::size_t d = static_cast<std::size_t>(dim);
    k_minus_i.fill(t);
    const auto& rp = k_minus_i.row_ptr();
    const auto& cols = k_minus_i.cols();
    const auto& vals = k_minus_i.values();
    for (int i = 0; i < dim; ++i) {
      cplx* xrow = scratch.data() + static_cast<std::size_t>(i) * d;
      if (rp[i] == rp[i + 1]) {
        std::fill(xrow, xrow + d, cplx(0.0));
        continue;
      }
      table->cscal(d, vals[rp[i]], rho + static_cast<std::size_t>(cols[rp[i]]) * d, xrow);
      for (int p = rp[i] + 1; p < rp[i + 1]; ++p) {
        table->caxpy(d, vals[p], rho + static_cast<std::size_t>(cols[p]) * d, xrow);
      }
    }
    table->add_adjoint(d, scratch.data(), out);
    if (has_diagonal) table->cmul_acc(d * d, diagonal_weights.data(), rho, out);
    for (const auto& m : monomials) {
      if (!m.contiguous()) {
        table->sandwich(d, m.rows.size(), m.rows.data(), m.cols.data(), m.coef.data(), rho, out);
        continue;
      }
      for (std::size_t p = 0; p < m.rows.size(); ++p) {
        const cplx* src = rho + static_cast<std::size_t>(m.cols[p]) * d;
        cplx* dst = out + static_cast<std::size_t>(m.rows[p]) * d;
        for (const Run& run : m.runs) {
          table->cmul_acc_scaled(run.length, m.coef[p], m.conj_coef.data() + run.first,
                                 src + m.cols[run.first], dst + m.rows[run.first]);
        }
      }
    }
    if (!general.empty()) {
      Eigen::Map<const DenseMatrix> r(rho, dim, dim);
      Eigen::Map<DenseMatrix> o(out, dim, dim);
      for (const auto& [rate, l] : general) {
        const DenseMatrix lr = l * r;
        o += rate * (lr * SparseMatrix(l.adjoint()));
      }
    }
  }
};

LiouvillianKernel::LiouvillianKernel(const LindbladModel& model, const kernels::KernelTable& table)
    : impl_(std::make_unique<Impl>(model, table)) {
  model.validate();
}

LiouvillianKernel::~LiouvillianKernel() = default;
LiouvillianKernel::LiouvillianKernel(LiouvillianKernel&&) noexcept = default;
LiouvillianKernel& LiouvillianKernel::operator=(LiouvillianKernel&&) noexcept = default;

int LiouvillianKernel::dimension() const noexcept { return impl_->dim; }

void LiouvillianKernel::apply(double t, const cplx* rho, cplx* out) { impl_->apply(t, rho, out); }

DenseMatrix LiouvillianKernel::apply(double t, const DensityMatrix& rho) {
  if (rho.matrix().rows() != impl_->dim) throw SpaceMismatch("density matrix does not match the model");
  DenseMatrix out(impl_->dim, impl_->dim);
  impl_->apply(t, rho.matrix().data(), out.data());
  return out;
}

// ---------------------------------------------------------------------------
// Propagation

namespace {

struct StepPlan {
  double step = 0.0;
  long steps = 0;
};

StepPlan plan_steps(const IntegratorConfig& cfg, const Hamiltonian& h, double total_rate,
                    double steps_per_period) {
  if (!(cfg.final_time >= 0.0)) throw NumericalError("final time must be non-negative");
  StepPlan plan;
  if (cfg.final_time == 0.0) return plan;
  double h0 = cfg.step > 0.0 ? cfg.step : automatic_step(h, total_rate, steps_per_period);
  if (h0 <= 0.0) {
    // Nothing evolves: a single step is exact.
    plan.steps = 1;
    plan.step = cfg.final_time;
    return plan;
  }
  plan.steps = static_cast<long>(std::ceil(cfg.final_time / h0 - 1e-9));
  plan.steps = std::max(plan.steps, 1L);
  plan.step = cfg.final_time / static_cast<double>(plan.steps);
  return plan;
}

std::string describe(const char* what, double value, double limit, double time) {
  std::ostringstream os;
  os << what << " " << value << " beyond tolerance " << limit << " at t = " << time << " s";
  return os.str();
}

DiagnosticPoint diagnose(double t, const DensityMatrix& rho) {
  DiagnosticPoint p;
  p.time = t;
  p.trace_error = std::abs(rho.trace() - 1.0);
  p.hermiticity_error = rho.hermiticity_error();
  p.min_eigenvalue = rho.min_eigenvalue();
  p.leakage = top_fock_leakage(rho);
  return p;
}

std::string breach(const DiagnosticPoint& p, const IntegratorConfig& cfg) {
  if (!(p.trace_error <= cfg.trace_tol)) return describe("trace error", p.trace_error, cfg.trace_tol, p.time);
  if (!(p.hermiticity_error <= cfg.hermiticity_tol)) {
    return describe("Hermiticity error", p.hermiticity_error, cfg.hermiticity_tol, p.time);
  }
  if (!(p.min_eigenvalue >= cfg.negativity_floor)) {
    return describe("negative eigenvalue", p.min_eigenvalue, cfg.negativity_floor, p.time);
  }
  return {};
}

}  // namespace

EvolutionResult evolve_master(const DensityMatrix& rho0, const LindbladModel& model,
                              const IntegratorConfig& cfg) {
  require_same_space(rho0.space(), model.space());
  rho0.validate(cfg.trace_tol, cfg.hermiticity_tol, cfg.negativity_floor);
  const auto start = std::chrono::steady_clock::now();
  // Without dissipation a pure state sits on the positivity boundary; use the closed step.
  const double per_period = model.channels.empty() ? cfg.closed_steps_per_period : cfg.steps_per_period;
  const StepPlan plan = plan_steps(cfg, model.hamiltonian, model.total_rate(), per_period);

  EvolutionResult result;
  result.step = plan.step;
  DensityMatrix rho = rho0;
  result.timeline.push_back(diagnose(0.0, rho));

  LiouvillianKernel rhs(model);
  const kernels::KernelTable& k = kernels::active();
  const int dim = model.space().dimension();
  const std::size_t n = static_cast<std::size_t>(dim) * dim;
  DenseMatrix acc(dim, dim);
  DenseMatrix stage(dim, dim);
  DenseMatrix slope(dim, dim);
  const double h = plan.step;
  const int diag_every = std::max(cfg.diagnostic_every, 1);
  const int herm_every = cfg.hermitize_every;

  for (long step = 0; step < plan.steps; ++step) {
    const double t = static_cast<double>(step) * h;
    cplx* r = rho.matrix().data();
    rhs.apply(t, r, slope.data());
    k.xpay(n, r, h / 6.0, slope.data(), acc.data());
    k.xpay(n, r, h / 2.0, slope.data(), stage.data());
    rhs.apply(t + 0.5 * h, stage.data(), slope.data());
    k.raxpy(n, h / 3.0, slope.data(), acc.data());
    k.xpay(n, r, h / 2.0, slope.data(), stage.data());
    rhs.apply(t + 0.5 * h, stage.data(), slope.data());
    k.raxpy(n, h / 3.0, slope.data(), acc.data());
    k.xpay(n, r, h, slope.data(), stage.data());
    rhs.apply(t + h, stage.data(), slope.data());
    k.raxpy(n, h / 6.0, slope.data(), acc.data());
    rho.matrix().swap(acc);

    const long done = step + 1;
    const bool last = done == plan.steps;
    if (last || done % diag_every == 0) {
      const DiagnosticPoint p = diagnose(static_cast<double>(done) * h, rho);
      result.timeline.push_back(p);
      if (auto why = breach(p, cfg); !why.empty()) {
        result.ok = false;
        result.failure = why;
        result.steps = done;
        break;
      }
    }
    if (herm_every > 0 && done % herm_every == 0) rho.hermitize();
    result.steps = done;
  }
  if (result.ok) {
    if (auto why = breach(result.timeline.front(), cfg); !why.empty()) {
      result.ok = false;
      result.failure = why;
    }
  }
  result.rho = std::move(rho);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

EvolutionResult evolve_schrodinger(const StateVector& psi0, const Hamiltonian& hamiltonian,
                                   const IntegratorConfig& cfg) {
  require_same_space(psi0.space(), hamiltonian.space());
  if (std::abs(psi0.norm() - 1.0) > cfg.norm_tol) {
    throw NumericalError("initial state is not normalized (norm " + std::to_string(psi0.norm()) + ")");
  }
  const auto start = std::chrono::steady_clock::now();
  const StepPlan plan = plan_steps(cfg, hamiltonian, 0.0, cfg.closed_steps_per_period);
  const int dim = hamiltonian.space().dimension();
  PhasedCsr a(dim, hamiltonian, SparseMatrix(dim, dim), cplx(0.0, -1.0));

  EvolutionResult result;
  result.step = plan.step;
  Vector psi = psi0.amplitudes();
  Vector acc(dim), stage(dim), slope(dim);
  auto point = [&](double t, const Vector& v) {
    DiagnosticPoint p;
    p.time = t;
    p.norm_error = std::abs(v.norm() - 1.0);
    p.leakage = top_fock_leakage(StateVector(psi0.space(), v));
    return p;
  };
  result.timeline.push_back(point(0.0, psi));
  const double h = plan.step;
  const int diag_every = std::max(cfg.diagnostic_every, 1);
  const std::size_t nd = static_cast<std::size_t>(dim);
  const kernels::KernelTable& k = kernels::active();

  for (long step = 0; step < plan.steps; ++step) {
    const double t = static_cast<double>(step) * h;
    a.fill(t);
    a.multiply(psi.data(), slope.data());
    k.xpay(nd, psi.data(), h / 6.0, slope.data(), acc.data());
    k.xpay(nd, psi.data(), h / 2.0, slope.data(), stage.data());
    a.fill(t + 0.5 * h);
    a.multiply(stage.data(), slope.data());
    k.raxpy(nd, h / 3.0, slope.data(), acc.data());
    k.xpay(nd, psi.data(), h / 2.0, slope.data(), stage.data());
    a.fill(t + 0.5 * h);
    a.multiply(stage.data(), slope.data());
    k.raxpy(nd, h / 3.0, slope.data(), acc.data());
    k.xpay(nd, psi.data(), h, slope.data(), stage.data());
    a.fill(t + h);
    a.multiply(stage.data(), slope.data());
    k.raxpy(nd, h / 6.0, slope.data(), acc.data());
    psi.swap(acc);
    const long done = step + 1;
    result.steps = done;
    if (done == plan.steps || done % diag_every == 0) {
      const DiagnosticPoint p = point(static_cast<double>(done) * h, psi);
      result.timeline.push_back(p);
      if (!(p.norm_error <= cfg.norm_tol)) {
        result.ok = false;
        result.failure = describe("norm drift", p.norm_error, cfg.norm_tol, p.time);
        break;
      }
    }
  }
  result.psi = StateVector(psi0.space(), std::move(psi));
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

double fidelity(const DensityMatrix& rho, const StateVector& target) {
  require_same_space(rho.space(), target.space());
  const Vector& v = target.amplitudes();
  const double overlap = v.dot(rho.matrix() * v).real();
  return std::sqrt(std::clamp(overlap, 0.0, 1.0));
}

double fidelity(const StateVector& psi, const StateVector& target) {
  return std::min(1.0, std::abs(target.inner(psi)));
}

}  // namespace ccz
