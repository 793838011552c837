// Copyright 2026 The symprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symprep/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace symprep {
namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseOperator from_triplets(const RegisterShape& shape, const std::vector<Triplet>& triplets) {
  const auto dim = static_cast<Eigen::Index>(shape.dim());
  SparseOperator op(dim, dim);
  op.setFromTriplets(triplets.begin(), triplets.end());
  op.prune(Complex(0.0, 0.0));
  return op;
}

void require_qubit(const RegisterShape& shape, int qubit) {
  if (qubit < 1 || qubit > shape.num_qubits) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " outside register of " +
                            std::to_string(shape.num_qubits));
  }
}

void require_mode(const RegisterShape& shape) {
  if (shape.boson_dim < 2) throw ConfigError("bus model needs a mode truncation of at least 2 levels");
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Union-find over basis indices, used to split a Hamiltonian into the blocks
// it leaves invariant.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

DerivedParams derive_params(const DriveConfig& cfg) {
  if (!std::isfinite(cfg.delta1) || !std::isfinite(cfg.delta2) || cfg.delta1 == 0.0 || cfg.delta2 == 0.0) {
    throw ConfigError("detunings must be finite and nonzero");
  }
  DerivedParams p;
  p.lambda1 = std::norm(cfg.g1) / cfg.delta1;
  p.lambda2 = std::norm(cfg.g2) / cfg.delta2;
  p.dbar = 1.0 / (0.5 * (1.0 / cfg.delta1 + 1.0 / cfg.delta2));
  p.beta = std::conj(cfg.g1) * cfg.g2 / p.dbar;
  p.delta = cfg.delta1 - cfg.delta2 - p.lambda2 + p.lambda1;
  return p;
}

std::vector<std::string> dispersive_warnings(const DriveConfig& cfg) {
  std::vector<std::string> out;
  if (std::abs(cfg.delta1) < 10.0 * std::abs(cfg.g1)) {
    out.push_back("|delta1| / |g1| = " + format_number(std::abs(cfg.delta1) / std::abs(cfg.g1)) +
                  " is below 10; the dispersive approximation is questionable");
  }
  if (std::abs(cfg.delta2) < 10.0 * std::abs(cfg.g2)) {
    out.push_back("|delta2| / |g2| = " + format_number(std::abs(cfg.delta2) / std::abs(cfg.g2)) +
                  " is below 10; the dispersive approximation is questionable");
  }
  return out;
}

double solve_delta2(double delta_target, double g2, double delta1, double g1) {
  if (delta1 == 0.0 || !std::isfinite(delta1)) throw ConfigError("delta1 must be finite and nonzero");
  const double lambda1 = g1 * g1 / delta1;
  const double g2sq = g2 * g2;
  double d2 = delta1 + lambda1 - delta_target;
  constexpr int kMaxIterations = 200;
  for (int it = 0; it < kMaxIterations; ++it) {
    if (d2 == 0.0) break;
    const double next = delta1 + lambda1 - g2sq / d2 - delta_target;
    if (std::abs(next - d2) <= 1e-14 * std::max(1.0, std::abs(d2))) {
      DriveConfig cfg{Complex(g1, 0.0), Complex(g2, 0.0), delta1, next};
      if (std::abs(derive_params(cfg).delta - delta_target) <= 1e-9) return next;
      break;
    }
    d2 = next;
  }
  throw ConvergenceError("delta2 fixed-point iteration did not converge for delta target " +
                         format_number(delta_target));
}

int exchange_eigenvalue(int n, int k) {
  validate(DickeLabel{n, k});
  return k * (n - k);
}

AddressingSpec AddressingSpec::prefix(int num_qubits, int n) {
  if (n < 1 || n >= num_qubits) {
    throw ConfigError("ensemble size must lie in [1, N-1]; got n=" + std::to_string(n) +
                      " for N=" + std::to_string(num_qubits));
  }
  AddressingSpec spec;
  for (int q = 1; q <= n; ++q) spec.ensemble.push_back(q);
  spec.extra = n + 1;
  for (int q = n + 2; q <= num_qubits; ++q) spec.spectators.push_back(q);
  return spec;
}

void validate(const AddressingSpec& spec, int num_qubits) {
  if (spec.ensemble.empty()) throw ConfigError("ensemble must contain at least one qubit");
  std::set<int> seen;
  auto add = [&](int q) {
    if (q < 1 || q > num_qubits) throw ConfigError("addressed qubit " + std::to_string(q) + " outside register");
    if (!seen.insert(q).second) throw ConfigError("qubit " + std::to_string(q) + " addressed twice");
  };
  for (int q : spec.ensemble) add(q);
  add(spec.extra);
  for (int q : spec.spectators) add(q);
  if (static_cast<int>(seen.size()) != num_qubits) throw ConfigError("addressing does not cover every qubit");
}

SparseOperator identity_operator(const RegisterShape& shape) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    t.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), 1.0);
  }
  return from_triplets(shape, t);
}

SparseOperator sigma_minus(const RegisterShape& shape, int qubit) {
  require_qubit(shape, qubit);
  const std::uint64_t m = shape.mask(qubit);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    const std::uint64_t bits = shape.bits_of(i);
    if ((bits & m) == 0) continue;
    t.emplace_back(static_cast<Eigen::Index>(shape.index(bits ^ m, shape.boson_of(i))), static_cast<Eigen::Index>(i),
                   1.0);
  }
  return from_triplets(shape, t);
}

SparseOperator annihilation(const RegisterShape& shape) {
  require_mode(shape);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    const int m = shape.boson_of(i);
    if (m == 0) continue;
    t.emplace_back(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(i), std::sqrt(static_cast<double>(m)));
  }
  return from_triplets(shape, t);
}

SparseOperator excitation_number(const RegisterShape& shape, const std::vector<int>& qubits) {
  std::uint64_t mask = 0;
  for (int q : qubits) {
    require_qubit(shape, q);
    mask |= shape.mask(q);
  }
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    const int count = std::popcount(shape.bits_of(i) & mask);
    if (count != 0) t.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), double(count));
  }
  return from_triplets(shape, t);
}

SparseOperator total_excitation(const RegisterShape& shape) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    const int count = shape.excitations(i);
    if (count != 0) t.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), double(count));
  }
  return from_triplets(shape, t);
}

SparseOperator exchange_operator(const RegisterShape& shape, const std::vector<int>& qubits) {
  for (int q : qubits) require_qubit(shape, q);
  std::vector<Triplet> t;
  // sigma_i sigma_j^dagger moves an excitation from qubit i to qubit j.
  for (std::size_t idx = 0; idx < shape.dim(); ++idx) {
    const std::uint64_t bits = shape.bits_of(idx);
    for (int i : qubits) {
      const std::uint64_t mi = shape.mask(i);
      if ((bits & mi) == 0) continue;
      for (int j : qubits) {
        const std::uint64_t mj = shape.mask(j);
        if (i == j || (bits & mj) != 0) continue;
        t.emplace_back(static_cast<Eigen::Index>(shape.index(bits ^ mi ^ mj, shape.boson_of(idx))),
                       static_cast<Eigen::Index>(idx), 1.0);
      }
    }
  }
  return from_triplets(shape, t);
}

bool is_hermitian(const SparseOperator& op, double tol) {
  if (op.rows() != op.cols()) return false;
  const SparseOperator diff = op - SparseOperator(op.adjoint());
  double scale = 1.0;
  double worst = 0.0;
  for (Eigen::Index r = 0; r < op.outerSize(); ++r) {
    for (SparseOperator::InnerIterator it(op, r); it; ++it) scale = std::max(scale, std::abs(it.value()));
  }
  for (Eigen::Index r = 0; r < diff.outerSize(); ++r) {
    for (SparseOperator::InnerIterator it(diff, r); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst <= tol * scale;
}

SparseOperator DrivenHamiltonian::at(double t) const {
  SparseOperator h = static_part;
  for (const auto& term : terms) {
    const Complex w = term.amplitude * std::exp(kI * term.frequency * t);
    h += w * term.op + std::conj(w) * SparseOperator(term.op.adjoint());
  }
  return h;
}

CVector DrivenHamiltonian::apply(double t, const CVector& psi) const {
  CVector out = static_part * psi;
  for (const auto& term : terms) {
    const Complex w = term.amplitude * std::exp(kI * term.frequency * t);
    out.noalias() += w * (term.op * psi);
    out.noalias() += std::conj(w) * (term.op.adjoint() * psi);
  }
  return out;
}

namespace {

SparseOperator collective_coupling(const RegisterShape& shape, const AddressingSpec& spec) {
  // sum_i sigma_i sigma_x^dagger: moves one excitation from the ensemble to the extra qubit.
  SparseOperator sx = sigma_minus(shape, spec.extra);
  SparseOperator raise_x = sx.adjoint();
  SparseOperator op(static_cast<Eigen::Index>(shape.dim()), static_cast<Eigen::Index>(shape.dim()));
  for (int q : spec.ensemble) op += SparseOperator(sigma_minus(shape, q) * raise_x);
  return op;
}

}  // namespace

Hamiltonian build_effective_rotating(const RegisterShape& shape, const AddressingSpec& spec, const DerivedParams& p) {
  validate(spec, shape.num_qubits);
  const SparseOperator coupling = collective_coupling(shape, spec);
  SparseOperator h = p.lambda1 * exchange_operator(shape, spec.ensemble);
  h += p.beta * coupling + std::conj(p.beta) * SparseOperator(coupling.adjoint());
  h -= p.delta * excitation_number(shape, {spec.extra});
  h.prune(Complex(0.0, 0.0));
  return Hamiltonian{shape, std::move(h)};
}

DrivenHamiltonian build_effective_lab(const RegisterShape& shape, const AddressingSpec& spec, const DerivedParams& p) {
  validate(spec, shape.num_qubits);
  DrivenHamiltonian h;
  h.shape = shape;
  h.static_part = p.lambda1 * exchange_operator(shape, spec.ensemble);
  h.terms.push_back(HarmonicTerm{collective_coupling(shape, spec), p.beta, -p.delta});
  return h;
}

DrivenHamiltonian build_full_bus(const RegisterShape& shape, const AddressingSpec& spec, const DriveConfig& cfg) {
  require_mode(shape);
  validate(spec, shape.num_qubits);
  const SparseOperator a = annihilation(shape);
  SparseOperator ensemble_op(static_cast<Eigen::Index>(shape.dim()), static_cast<Eigen::Index>(shape.dim()));
  for (int q : spec.ensemble) ensemble_op += SparseOperator(SparseOperator(sigma_minus(shape, q).adjoint()) * a);
  const SparseOperator extra_op = SparseOperator(sigma_minus(shape, spec.extra).adjoint()) * a;
  DrivenHamiltonian h;
  h.shape = shape;
  h.static_part = SparseOperator(static_cast<Eigen::Index>(shape.dim()), static_cast<Eigen::Index>(shape.dim()));
  h.terms.push_back(HarmonicTerm{ensemble_op, cfg.g1, cfg.delta1});
  h.terms.push_back(HarmonicTerm{extra_op, cfg.g2, cfg.delta2});
  return h;
}

SparseOperator full_bus_frame_generator(const RegisterShape& shape, const AddressingSpec& spec,
                                        const DriveConfig& cfg) {
  require_mode(shape);
  const SparseOperator a = annihilation(shape);
  SparseOperator h0 = -cfg.delta1 * SparseOperator(SparseOperator(a.adjoint()) * a);
  h0 += (cfg.delta2 - cfg.delta1) * excitation_number(shape, {spec.extra});
  h0.prune(Complex(0.0, 0.0));
  return h0;
}

Hamiltonian build_full_bus_static(const RegisterShape& shape, const AddressingSpec& spec, const DriveConfig& cfg) {
  const DrivenHamiltonian driven = build_full_bus(shape, spec, cfg);
  SparseOperator h = full_bus_frame_generator(shape, spec, cfg);
  for (const auto& term : driven.terms) {
    h += term.amplitude * term.op + std::conj(term.amplitude) * SparseOperator(term.op.adjoint());
  }
  h.prune(Complex(0.0, 0.0));
  return Hamiltonian{shape, std::move(h)};
}

SparseOperator dispersive_generator(const RegisterShape& shape, const AddressingSpec& spec, const DriveConfig& cfg) {
  require_mode(shape);
  validate(spec, shape.num_qubits);
  if (cfg.delta1 == 0.0 || cfg.delta2 == 0.0) throw ConfigError("detunings must be nonzero");
  const SparseOperator a = annihilation(shape);
  // sigma^dag a raises the frame energy by delta1 (ensemble) or delta2 (extra qubit).
  SparseOperator s(static_cast<Eigen::Index>(shape.dim()), static_cast<Eigen::Index>(shape.dim()));
  for (int q : spec.ensemble) {
    s += (cfg.g1 / cfg.delta1) * SparseOperator(SparseOperator(sigma_minus(shape, q).adjoint()) * a);
  }
  s += (cfg.g2 / cfg.delta2) * SparseOperator(SparseOperator(sigma_minus(shape, spec.extra).adjoint()) * a);
  SparseOperator generator = s - SparseOperator(s.adjoint());
  generator.prune(Complex(0.0, 0.0));
  return generator;
}

StateVector undress(const StateVector& psi, const AddressingSpec& spec, const DriveConfig& cfg) {
  // exp(S) = exp(-i (i S) * 1) with i S Hermitian.
  const SparseOperator h = kI * dispersive_generator(psi.shape(), spec, cfg);
  return Propagator(Hamiltonian{psi.shape(), h}).evolve(psi, 1.0);
}

StateVector apply_diagonal_phase(const SparseOperator& diagonal, double t, const StateVector& psi) {
  if (diagonal.rows() != static_cast<Eigen::Index>(psi.dim())) throw std::invalid_argument("operator size mismatch");
  CVector amps = psi.amplitudes();
  for (Eigen::Index r = 0; r < diagonal.outerSize(); ++r) {
    for (SparseOperator::InnerIterator it(diagonal, r); it; ++it) {
      if (it.row() != it.col()) throw std::invalid_argument("frame generator must be diagonal");
      amps[it.row()] *= std::exp(kI * it.value().real() * t);
    }
  }
  return StateVector(psi.shape(), std::move(amps));
}

StateVector lab_to_rotating(const StateVector& psi_lab, const AddressingSpec& spec, double delta, double t) {
  return apply_diagonal_phase(excitation_number(psi_lab.shape(), {spec.extra}), delta * t, psi_lab);
}

StateVector rotating_to_lab(const StateVector& psi_rot, const AddressingSpec& spec, double delta, double t) {
  return apply_diagonal_phase(excitation_number(psi_rot.shape(), {spec.extra}), -delta * t, psi_rot);
}

Propagator::Propagator(const Hamiltonian& h) : shape_(h.shape) {
  const auto dim = static_cast<std::size_t>(h.matrix.rows());
  if (dim != shape_.dim() || h.matrix.cols() != h.matrix.rows()) {
    throw std::invalid_argument("Hamiltonian does not match its register");
  }
  if (!is_hermitian(h.matrix)) throw NumericalError("Hamiltonian is not Hermitian");
  DisjointSets sets(dim);
  for (Eigen::Index r = 0; r < h.matrix.outerSize(); ++r) {
    for (SparseOperator::InnerIterator it(h.matrix, r); it; ++it) {
      if (it.value() != Complex(0.0, 0.0)) {
        sets.unite(static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()));
      }
    }
  }
  std::vector<std::vector<Eigen::Index>> groups(dim);
  for (std::size_t i = 0; i < dim; ++i) groups[sets.find(i)].push_back(static_cast<Eigen::Index>(i));
  for (auto& indices : groups) {
    if (indices.empty()) continue;
    const auto n = static_cast<Eigen::Index>(indices.size());
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) block(a, b) = h.matrix.coeff(indices[a], indices[b]);
    }
    Block blk;
    blk.indices = std::move(indices);
    if (n == 1) {
      blk.vectors = Eigen::MatrixXcd::Identity(1, 1);
      blk.energies = Eigen::VectorXd::Constant(1, block(0, 0).real());
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
      if (solver.info() != Eigen::Success) throw NumericalError("eigen-decomposition failed");
      blk.vectors = solver.eigenvectors();
      blk.energies = solver.eigenvalues();
    }
    blocks_.push_back(std::move(blk));
  }
}

StateVector Propagator::evolve(const StateVector& psi, double t) const {
  if (!(psi.shape() == shape_)) throw std::invalid_argument("state does not match the propagator register");
  CVector out = psi.amplitudes();
  for (const Block& blk : blocks_) {
    const auto n = static_cast<Eigen::Index>(blk.indices.size());
    if (n == 1) {
      out[blk.indices[0]] *= std::exp(-kI * blk.energies[0] * t);
      continue;
    }
    CVector local(n);
    for (Eigen::Index a = 0; a < n; ++a) local[a] = out[blk.indices[a]];
    CVector coeff = blk.vectors.adjoint() * local;
    for (Eigen::Index a = 0; a < n; ++a) coeff[a] *= std::exp(-kI * blk.energies[a] * t);
    local = blk.vectors * coeff;
    for (Eigen::Index a = 0; a < n; ++a) out[blk.indices[a]] = local[a];
  }
  return StateVector(shape_, std::move(out));
}

StateVector propagate(const Hamiltonian& h, const StateVector& psi, double t) {
  return Propagator(h).evolve(psi, t);
}

StateVector propagate(const DrivenHamiltonian& h, const StateVector& psi, double t0, double t1, double max_dt,
                      const StepObserver& observer) {
  if (!(max_dt > 0.0)) throw NumericalError("integration step must be positive");
  if (!(psi.shape() == h.shape)) throw std::invalid_argument("state does not match the Hamiltonian register");
  if (!is_hermitian(h.at(t0))) throw NumericalError("Hamiltonian is not Hermitian");
  const double span = t1 - t0;
  if (span < 0.0) throw std::invalid_argument("integration interval must not run backwards");
  const auto steps = static_cast<long>(std::ceil(span / max_dt));
  if (steps == 0) return psi;
  const double dt = span / static_cast<double>(steps);
  CVector y = psi.amplitudes();
  auto f = [&](double t, const CVector& v) -> CVector { return -kI * h.apply(t, v); };
  for (long s = 0; s < steps; ++s) {
    const double t = t0 + dt * static_cast<double>(s);
    const CVector k1 = f(t, y);
    const CVector k2 = f(t + 0.5 * dt, y + 0.5 * dt * k1);
    const CVector k3 = f(t + 0.5 * dt, y + 0.5 * dt * k2);
    const CVector k4 = f(t + dt, y + dt * k3);
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (observer) observer(t + dt - t0, StateVector(h.shape, y));
  }
  return StateVector(h.shape, std::move(y));
}

StateVector propagate_piecewise(const std::function<Hamiltonian(double)>& family, const StateVector& psi,
                                double duration, int steps) {
  if (steps < 1) throw NumericalError("piecewise propagation needs at least one slice");
  const double dt = duration / steps;
  StateVector out = psi;
  for (int s = 0; s < steps; ++s) out = propagate(family((s + 0.5) * dt), out, dt);
  return out;
}

void Trajectory::record(double t, const StateVector& psi, const std::vector<Observable>& observables) {
  if (columns.empty()) {
    for (const auto& o : observables) columns.push_back(o.name);
  }
  if (columns.size() != observables.size()) throw std::invalid_argument("observable set changed mid-trajectory");
  std::vector<double> row;
  row.reserve(observables.size());
  for (const auto& o : observables) row.push_back(population(o.state, psi));
  times.push_back(t);
  rows.push_back(std::move(row));
}

void Trajectory::append(const Trajectory& other, double offset) {
  if (other.empty()) return;
  if (columns.empty()) columns = other.columns;
  if (columns != other.columns) throw std::invalid_argument("trajectory columns differ");
  for (std::size_t i = 0; i < other.times.size(); ++i) {
    times.push_back(other.times[i] + offset);
    rows.push_back(other.rows[i]);
  }
}

Trajectory sample_trajectory(const Propagator& propagator, const StateVector& psi0, double t, int samples,
                             const std::vector<Observable>& observables) {
  if (samples < 1) throw std::invalid_argument("need at least one sample interval");
  Trajectory out;
  for (const auto& o : observables) out.columns.push_back(o.name);
  const double dt = t / samples;
  StateVector psi = psi0;
  out.record(0.0, psi, observables);
  for (int s = 1; s <= samples; ++s) {
    psi = propagator.evolve(psi0, dt * s);
    out.record(dt * s, psi, observables);
  }
  return out;
}

std::vector<double> sector_weights(const StateVector& psi) {
  const auto& shape = psi.shape();
  const int max_exc = shape.num_qubits + std::max(shape.boson_dim - 1, 0);
  std::vector<double> w(static_cast<std::size_t>(max_exc) + 1, 0.0);
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    w[static_cast<std::size_t>(shape.excitations(i))] += std::norm(psi.amplitude(i));
  }
  return w;
}

double excitation_drift(const StateVector& before, const StateVector& after) {
  const auto a = sector_weights(before);
  const auto b = sector_weights(after);
  if (a.size() != b.size()) throw std::invalid_argument("register shapes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::ostringstream out;
  out << "# rates in units of g1, time in units of 1/g1\n";
  out << "t";
  for (const auto& c : trajectory.columns) out << ',' << c;
  out << '\n';
  for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
    out << format_number(trajectory.times[i]);
    for (double v : trajectory.rows[i]) out << ',' << format_number(v);
    out << '\n';
  }
  return out.str();
}

double to_seconds(double protocol_time, double g1_angular) {
  if (!(g1_angular > 0.0) || !std::isfinite(g1_angular)) throw ConfigError("physical g1 must be positive");
  return protocol_time / g1_angular;
}

}  // namespace symprep
