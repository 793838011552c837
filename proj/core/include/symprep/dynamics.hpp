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

#pragma once

// Dispersive red-sideband dynamics: the effective qubit-only Hamiltonian (in
// its laboratory and rotating forms), an explicit qubit + bus model, and the
// propagators used to integrate them. Units: hbar = 1, rates in units of g1,
// times in units of 1/g1.

#include <functional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "symprep/symmetric.hpp"

namespace symprep {

using SparseOperator = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

struct DriveConfig {
  Complex g1{1.0, 0.0};  // collective Rabi frequency on the ensemble
  Complex g2{0.1, 0.0};  // Rabi frequency on the extra qubit
  double delta1 = 20.0;
  double delta2 = 20.0;
};

struct DerivedParams {
  double lambda1 = 0.0;  // |g1|^2 / delta1
  double lambda2 = 0.0;  // |g2|^2 / delta2
  Complex beta{};        // conj(g1) g2 / dbar
  double delta = 0.0;    // delta1 - delta2 - lambda2 + lambda1
  double dbar = 0.0;     // harmonic mean of the detunings

  /// lambda1 / |beta|: how strongly neighbouring subspaces are separated.
  double selectivity() const { return lambda1 / std::abs(beta); }
};

/// Throws ConfigError on a zero (or non-finite) detuning.
DerivedParams derive_params(const DriveConfig& cfg);

/// Human-readable warnings for couplings that are not well inside the
/// dispersive regime (|delta| < 10 |g|).
std::vector<std::string> dispersive_warnings(const DriveConfig& cfg);

/// delta2 such that derive_params yields delta == delta_target, by fixed-point
/// iteration. Throws ConvergenceError if the iteration does not settle.
double solve_delta2(double delta_target, double g2, double delta1, double g1);

/// Eigenvalue k(n-k) of sum_{i != j} sigma_i sigma_j^dagger on |D_{n,k}>.
int exchange_eigenvalue(int n, int k);

/// Which qubits are driven: the ensemble by the collective sideband, the
/// extra qubit by the second sideband; spectators are idle.
struct AddressingSpec {
  std::vector<int> ensemble;
  int extra = 0;
  std::vector<int> spectators;

  /// Ensemble = qubits 1..n, extra = qubit n+1, rest spectators.
  static AddressingSpec prefix(int num_qubits, int n);
};

/// Throws ConfigError unless ensemble, extra and spectators partition 1..N
/// and the ensemble is non-empty.
void validate(const AddressingSpec& spec, int num_qubits);

// ---------------------------------------------------------------------------
// Operators on a register (qubits plus optional mode).

SparseOperator identity_operator(const RegisterShape& shape);
SparseOperator sigma_minus(const RegisterShape& shape, int qubit);
SparseOperator annihilation(const RegisterShape& shape);
/// Diagonal operator sum_q |e><e|_q over the given qubits.
SparseOperator excitation_number(const RegisterShape& shape, const std::vector<int>& qubits);
/// Qubit excitations plus mode quanta.
SparseOperator total_excitation(const RegisterShape& shape);
/// sum_{i != j} sigma_i sigma_j^dagger over the listed qubits.
SparseOperator exchange_operator(const RegisterShape& shape, const std::vector<int>& qubits);

bool is_hermitian(const SparseOperator& op, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Hamiltonians.

struct Hamiltonian {
  RegisterShape shape;
  SparseOperator matrix;
};

/// amplitude * exp(i frequency t) * op + h.c.
struct HarmonicTerm {
  SparseOperator op;
  Complex amplitude{1.0, 0.0};
  double frequency = 0.0;
};

/// H(t) = static_part + sum of harmonic terms.
struct DrivenHamiltonian {
  RegisterShape shape;
  SparseOperator static_part;
  std::vector<HarmonicTerm> terms;

  SparseOperator at(double t) const;
  /// H(t) psi without materialising H(t).
  CVector apply(double t, const CVector& psi) const;
};

/// Rotating-frame effective Hamiltonian
///   lambda1 sum_{i != j} sigma_i sigma_j^dag + (beta sum_i sigma_i sigma_x^dag + h.c.) - delta n_x,
/// with i, j over the ensemble and x the extra qubit; spectators and the mode
/// (if the register has one) are idle.
Hamiltonian build_effective_rotating(const RegisterShape& shape, const AddressingSpec& spec, const DerivedParams& p);

/// Laboratory form of the same model: the coupling carries exp(-i delta t)
/// and there is no -delta n_x term. psi_rot(t) = exp(i delta t n_x) psi_lab(t).
DrivenHamiltonian build_effective_lab(const RegisterShape& shape, const AddressingSpec& spec, const DerivedParams& p);

/// Qubit + bus red-sideband model in the interaction picture,
///   H(t) = sum_i (g1 sigma_i^dag a e^{+i delta1 t} + h.c.) + (g2 sigma_x^dag a e^{+i delta2 t} + h.c.).
/// With this sign, second-order elimination of the bus lands on the effective
/// model with the documented lambda, beta and delta. The register must carry
/// a mode with at least two levels (ConfigError otherwise).
DrivenHamiltonian build_full_bus(const RegisterShape& shape, const AddressingSpec& spec, const DriveConfig& cfg);

/// Time-independent form of the bus model, obtained with the frame generator
/// H0 = -delta1 a^dag a + (delta2 - delta1) n_x: psi_int(t) = exp(i H0 t) psi_static(t).
Hamiltonian build_full_bus_static(const RegisterShape& shape, const AddressingSpec& spec, const DriveConfig& cfg);

/// Anti-Hermitian generator S of the first-order dispersive (Schrieffer-Wolff)
/// transformation of the static bus model: exp(S) H exp(-S) has no
/// first-order qubit-bus coupling left, and exp(S) psi is the state in the
/// dressed basis the effective model describes.
SparseOperator dispersive_generator(const RegisterShape& shape, const AddressingSpec& spec, const DriveConfig& cfg);

/// exp(S) psi with S from dispersive_generator.
StateVector undress(const StateVector& psi, const AddressingSpec& spec, const DriveConfig& cfg);

/// exp(i t D) psi for a diagonal operator D (frame changes).
StateVector apply_diagonal_phase(const SparseOperator& diagonal, double t, const StateVector& psi);

/// psi_rot = exp(i delta t n_x) psi_lab for the effective model.
StateVector lab_to_rotating(const StateVector& psi_lab, const AddressingSpec& spec, double delta, double t);
StateVector rotating_to_lab(const StateVector& psi_rot, const AddressingSpec& spec, double delta, double t);

/// Generator H0 of the static bus frame.
SparseOperator full_bus_frame_generator(const RegisterShape& shape, const AddressingSpec& spec, const DriveConfig& cfg);

// ---------------------------------------------------------------------------
// Propagation.

/// Exact propagator exp(-i H t) of a time-independent Hamiltonian. The
/// Hamiltonian is split into the connected blocks of its sparsity pattern and
/// each block is diagonalised once.
class Propagator {
 public:
  /// Throws NumericalError if H is not Hermitian.
  explicit Propagator(const Hamiltonian& h);

  StateVector evolve(const StateVector& psi, double t) const;
  std::size_t num_blocks() const { return blocks_.size(); }
  const RegisterShape& shape() const { return shape_; }

 private:
  struct Block {
    std::vector<Eigen::Index> indices;
    Eigen::MatrixXcd vectors;
    Eigen::VectorXd energies;
  };
  RegisterShape shape_;
  std::vector<Block> blocks_;
};

/// exp(-i H t) psi.
StateVector propagate(const Hamiltonian& h, const StateVector& psi, double t);

/// Called after every integration step with the local time and state.
using StepObserver = std::function<void(double, const StateVector&)>;

/// Classical fourth-order Runge-Kutta integration of i d/dt psi = H(t) psi
/// from t0 to t1 with steps no longer than max_dt. Throws NumericalError if H
/// is not Hermitian at t0 or max_dt is not positive.
StateVector propagate(const DrivenHamiltonian& h, const StateVector& psi, double t0, double t1, double max_dt,
                      const StepObserver& observer = {});

/// Piecewise-constant (midpoint) exponential integration of a parametric
/// Hamiltonian family H(t) over [0, duration] in `steps` slices.
StateVector propagate_piecewise(const std::function<Hamiltonian(double)>& family, const StateVector& psi,
                                double duration, int steps);

// ---------------------------------------------------------------------------
// Observables and trajectories.

/// Population of a (qubit-only or register-shaped) reference state.
struct Observable {
  std::string name;
  StateVector state;
};

struct Trajectory {
  std::vector<std::string> columns;
  std::vector<double> times;
  std::vector<std::vector<double>> rows;

  bool empty() const { return times.empty(); }
  void record(double t, const StateVector& psi, const std::vector<Observable>& observables);
  /// Appends the samples of `other` shifted by `offset`; columns must match.
  void append(const Trajectory& other, double offset);
};

/// Samples the populations at samples+1 uniform times in [0, t].
Trajectory sample_trajectory(const Propagator& propagator, const StateVector& psi0, double t, int samples,
                             const std::vector<Observable>& observables);

/// Weight of each total-excitation sector (qubits plus mode quanta),
/// indexed by excitation number.
std::vector<double> sector_weights(const StateVector& psi);

/// Largest change in any sector weight between two states.
double excitation_drift(const StateVector& before, const StateVector& after);

/// Trajectory as CSV: comment header, "t,<columns>" and one row per sample.
std::string trajectory_csv(const Trajectory& trajectory);

/// Converts a duration in units of 1/g1 to seconds for a physical g1 (rad/s).
/// Throws ConfigError for non-positive rates.
double to_seconds(double protocol_time, double g1_angular);

}  // namespace symprep
