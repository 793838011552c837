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

#include "symprep/fock_route.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace symprep {
namespace {

constexpr double kNegligibleAngle = 1e-15;

// Ancilla + mode register: index = ancilla_bit * levels + fock.
struct JointView {
  int levels;
  Eigen::Index g(int m) const { return m; }
  Eigen::Index e(int m) const { return levels + m; }
};

void rotate_pair(CVector& v, Eigen::Index lo, Eigen::Index hi, double angle, double phi) {
  // exp(-i angle (e^{i phi} |hi><lo| + h.c.)) on the pair (lo, hi).
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Complex a = v[lo];
  const Complex b = v[hi];
  v[lo] = c * a - kI * std::exp(-kI * phi) * s * b;
  v[hi] = -kI * std::exp(kI * phi) * s * a + c * b;
}

void apply_pulse(CVector& v, const Pulse& p, int levels) {
  const JointView view{levels};
  if (p.kind == PulseKind::kCarrier) {
    for (int m = 0; m < levels; ++m) rotate_pair(v, view.g(m), view.e(m), p.theta, p.phi);
  } else {
    for (int m = 1; m < levels; ++m) rotate_pair(v, view.g(m), view.e(m - 1), p.theta * std::sqrt(double(m)), p.phi);
  }
}

// Piecewise-constant evolution of one Fock sector in its |k-j, D_{N,j}> basis.
CVector sector_run(int num_qubits, int k, const ChirpProfile& profile) {
  const int top = std::min(k, num_qubits);
  const int dim = top + 1;
  CVector psi = CVector::Zero(dim);
  psi[0] = 1.0;
  if (top == 0) return psi;
  const int slices = profile.slices();
  const double dt = profile.duration / slices;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  for (int s = 0; s < slices; ++s) {
    const double t = (s + 0.5) * dt;
    const double rate = profile.rate(t);
    const double detuning = profile.detuning(t, num_qubits);
    for (int j = 0; j < dim; ++j) {
      h(j, j) = detuning * j;
      if (j + 1 < dim) {
        const double w = rate * std::sqrt(double(k - j)) * std::sqrt(double(j + 1) * (num_qubits - j));
        h(j, j + 1) = w;
        h(j + 1, j) = w;
      }
    }
    solver.compute(h);
    const CVector phases = (-kI * solver.eigenvalues().cast<Complex>() * dt).array().exp();
    const Eigen::MatrixXcd v = solver.eigenvectors().cast<Complex>();
    psi = v * phases.asDiagonal() * (v.adjoint() * psi);
  }
  return psi;
}

void require_mode_state(int num_qubits, const CVector& mode_state, int truncation) {
  validate(RegisterShape{num_qubits, truncation});
  if (truncation < num_qubits + 1) {
    throw ConfigError("mode truncation " + std::to_string(truncation) + " is below N+1 = " +
                      std::to_string(num_qubits + 1));
  }
  if (mode_state.size() != truncation) throw ConfigError("mode state length differs from the truncation");
  for (Eigen::Index m = num_qubits + 1; m < mode_state.size(); ++m) {
    if (std::abs(mode_state[m]) > 1e-12) throw ConfigError("mode state holds more quanta than there are qubits");
  }
}

}  // namespace

PulseSequence law_eberly_synthesize(const SymmetricCoefficients& c) {
  const int top = c.num_qubits();
  const int levels = top + 1;
  const JointView view{levels};
  CVector v = CVector::Zero(2 * levels);
  for (int k = 0; k <= top; ++k) v[view.g(k)] = c[k];
  int highest = 0;
  for (int k = 0; k <= top; ++k) {
    if (std::abs(c[k]) > 0.0) highest = k;
  }
  std::vector<Pulse> backward;
  for (int m = highest; m >= 1; --m) {
    // Sideband empties |g,m> into |e,m-1>.
    const Complex gm = v[view.g(m)];
    const Complex em = v[view.e(m - 1)];
    const double angle = std::atan2(std::abs(gm), std::abs(em));
    if (angle > kNegligibleAngle) {
      const Pulse p{PulseKind::kSideband, angle / std::sqrt(double(m)), kPi / 2.0 - std::arg(gm) + std::arg(em)};
      apply_pulse(v, p, levels);
      backward.push_back(p);
    }
    // Carrier empties |e,m-1> into |g,m-1>.
    const Complex g0 = v[view.g(m - 1)];
    const Complex e0 = v[view.e(m - 1)];
    const double angle2 = std::atan2(std::abs(e0), std::abs(g0));
    if (angle2 > kNegligibleAngle) {
      const Pulse p{PulseKind::kCarrier, angle2, std::arg(e0) - std::arg(g0) - kPi / 2.0};
      apply_pulse(v, p, levels);
      backward.push_back(p);
    }
  }
  PulseSequence seq;
  seq.max_level = highest;
  const Complex vacuum = v[view.g(0)];
  seq.global_phase = vacuum / std::abs(vacuum);
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) {
    seq.pulses.push_back(Pulse{it->kind, it->theta, std::remainder(it->phi + kPi, 2.0 * kPi)});
  }
  return seq;
}

StateVector apply_pulses(const PulseSequence& sequence, const StateVector& psi) {
  if (psi.num_qubits() != 1 || psi.boson_dim() < 1) throw ConfigError("pulses act on one ancilla and a mode");
  if (psi.boson_dim() < sequence.max_level + 1) {
    throw ConfigError("mode truncation " + std::to_string(psi.boson_dim()) + " cannot hold Fock level " +
                      std::to_string(sequence.max_level));
  }
  CVector v = psi.amplitudes();
  for (const Pulse& p : sequence.pulses) apply_pulse(v, p, psi.boson_dim());
  return StateVector(psi.shape(), std::move(v));
}

StateVector apply_pulses(const PulseSequence& sequence, int mode_dim) {
  if (mode_dim < 1) throw ConfigError("mode truncation must be positive");
  StateVector start = StateVector::basis(RegisterShape{1, mode_dim}, 0, 0);
  CVector v = start.amplitudes() * sequence.global_phase;
  return apply_pulses(sequence, StateVector(start.shape(), std::move(v)));
}

StateVector fock_target(const SymmetricCoefficients& c, int mode_dim) {
  if (mode_dim < c.num_qubits() + 1) throw ConfigError("mode truncation too small for the target");
  CVector v = CVector::Zero(2 * mode_dim);
  for (int k = 0; k <= c.num_qubits(); ++k) v[k] = c[k];
  return StateVector(RegisterShape{1, mode_dim}, std::move(v));
}

double ChirpProfile::sweep_range(int num_qubits) const {
  return sweep_factor * peak_rate * std::sqrt(static_cast<double>(num_qubits));
}

double ChirpProfile::rate(double t) const {
  const double s = std::sin(kPi * t / duration);
  return peak_rate * s * s;
}

double ChirpProfile::detuning(double t, int num_qubits) const {
  return sweep_range(num_qubits) * (1.0 - 2.0 * t / duration);
}

int ChirpProfile::slices() const { return std::max(1, static_cast<int>(std::ceil(duration / time_step))); }

double adiabaticity_metric(const ChirpProfile& profile, int num_qubits) {
  const int dim = num_qubits + 1;
  constexpr int kGrid = 2000;
  double min_gap = std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  for (int s = 0; s <= kGrid; ++s) {
    const double t = profile.duration * s / kGrid;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) {
      h(j, j) = profile.detuning(t, num_qubits) * j;
      if (j + 1 < dim) {
        h(j, j + 1) = h(j + 1, j) =
            profile.rate(t) * std::sqrt(double(num_qubits - j)) * std::sqrt(double(j + 1) * (num_qubits - j));
      }
    }
    solver.compute(h, Eigen::EigenvaluesOnly);
    min_gap = std::min(min_gap, solver.eigenvalues()[1] - solver.eigenvalues()[0]);
  }
  const double sweep_rate = 2.0 * profile.sweep_range(num_qubits) / profile.duration;
  return min_gap * min_gap / sweep_rate;
}

void validate(const ChirpProfile& profile, int num_qubits) {
  if (num_qubits < 1) throw ConfigError("chirp needs at least one qubit");
  if (!(profile.peak_rate > 0.0) || !(profile.sweep_factor > 0.0) || !(profile.duration > 0.0) ||
      !(profile.time_step > 0.0)) {
    throw ConfigError("chirp rate, sweep factor, duration and time step must be positive");
  }
  if (profile.adiabaticity_threshold > 0.0) {
    const double metric = adiabaticity_metric(profile, num_qubits);
    if (metric < profile.adiabaticity_threshold) {
      throw ConfigError("chirp adiabaticity " + std::to_string(metric) + " is below the threshold " +
                        std::to_string(profile.adiabaticity_threshold));
    }
  }
}

Hamiltonian chirp_hamiltonian(const RegisterShape& shape, const ChirpProfile& profile, double t) {
  std::vector<int> all(static_cast<std::size_t>(shape.num_qubits));
  for (int q = 1; q <= shape.num_qubits; ++q) all[static_cast<std::size_t>(q - 1)] = q;
  const SparseOperator a = annihilation(shape);
  SparseOperator coupling(static_cast<Eigen::Index>(shape.dim()), static_cast<Eigen::Index>(shape.dim()));
  for (int q : all) coupling += SparseOperator(SparseOperator(sigma_minus(shape, q).adjoint()) * a);
  SparseOperator h = profile.detuning(t, shape.num_qubits) * excitation_number(shape, all);
  h += profile.rate(t) * (coupling + SparseOperator(coupling.adjoint()));
  h.prune(Complex(0.0, 0.0));
  return Hamiltonian{shape, std::move(h)};
}

AdiabaticResult adiabatic_map(int num_qubits, const ChirpProfile& profile, const CVector& mode_state,
                              int truncation) {
  require_mode_state(num_qubits, mode_state, truncation);
  validate(profile, num_qubits);
  const RegisterShape shape{num_qubits, truncation};
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(shape.dim()));
  std::vector<Complex> sector(static_cast<std::size_t>(num_qubits) + 1, 0.0);
  const double norm2 = mode_state.squaredNorm();
  if (norm2 == 0.0) throw ConfigError("mode state is zero");
  Complex raw = 0.0;
  double corrected = 0.0;
  for (int k = 0; k <= num_qubits; ++k) {
    const Complex mk = mode_state[k];
    if (std::abs(mk) == 0.0) continue;
    const CVector u = sector_run(num_qubits, k, profile);
    sector[static_cast<std::size_t>(k)] = u[k];
    raw += std::norm(mk) * u[k];
    corrected += std::norm(mk) * std::abs(u[k]);
    for (std::uint64_t bits = 0; bits < shape.qubit_dim(); ++bits) {
      const int j = std::popcount(bits);
      if (j > k) continue;
      amps[static_cast<Eigen::Index>(shape.index(bits, k - j))] += mk * u[j] / dicke_norm(num_qubits, j);
    }
  }
  AdiabaticResult result{StateVector(shape, std::move(amps)), std::move(sector), 0.0, 0.0};
  result.fidelity_raw = std::norm(raw) / (norm2 * norm2);
  result.fidelity_phase_corrected = corrected * corrected / (norm2 * norm2);
  return result;
}

StateVector adiabatic_map_register(int num_qubits, const ChirpProfile& profile, const CVector& mode_state,
                                   int truncation) {
  require_mode_state(num_qubits, mode_state, truncation);
  validate(profile, num_qubits);
  const RegisterShape shape{num_qubits, truncation};
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(shape.dim()));
  for (int m = 0; m < truncation; ++m) amps[static_cast<Eigen::Index>(shape.index(0, m))] = mode_state[m];
  const StateVector psi0(shape, std::move(amps));
  return propagate_piecewise([&](double t) { return chirp_hamiltonian(shape, profile, t); }, psi0,
                             profile.duration, profile.slices());
}

FockRouteResult fock_route_prepare(const SymmetricCoefficients& c, const ChirpProfile& profile, int truncation) {
  const int n = c.num_qubits();
  if (truncation == 0) truncation = n + 2;
  PulseSequence pulses = law_eberly_synthesize(c);
  const StateVector joint = apply_pulses(pulses, truncation);
  const StateVector target = fock_target(c, truncation);
  const CVector mode_state = joint.amplitudes().head(truncation);
  FockRouteResult out{std::move(pulses), (joint.amplitudes() - target.amplitudes()).norm(),
                      adiabatic_map(n, profile, mode_state, truncation), 0.0, 0.0};
  Complex raw = 0.0;
  double corrected = 0.0;
  for (int k = 0; k <= n; ++k) {
    const Complex overlap = std::conj(c[k]) * mode_state[k];
    const Complex u = out.mapping.sector_amplitudes[static_cast<std::size_t>(k)];
    raw += overlap * u;
    corrected += std::abs(overlap * u);
  }
  out.fidelity_raw = std::norm(raw);
  out.fidelity_phase_corrected = corrected * corrected;
  return out;
}

}  // namespace symprep
