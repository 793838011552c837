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

// Compilation of the selective-flop protocol: starting from the staircase
// superposition sum_k c_k |(k)>, stage n = 1..N-1 merges qubit n+1 into the
// symmetric block of qubits 1..n with one selective flop per excitation
// number, turning every |(k)> into |D_{N,k}>.

#include <string>
#include <vector>

#include "symprep/dynamics.hpp"
#include "symprep/symmetric.hpp"

namespace symprep {

/// One selective flop |D_{n,k-1}>|e> -> cos(theta)|D_{n,k-1}>|e> + sin(theta)|D_{n,k}>|g>
/// on ensemble 1..n and extra qubit n+1.
struct StepPlan {
  int n = 1;
  int k = 1;
  std::vector<int> ensemble;
  int extra = 2;
  double delta_target = 0.0;  // lambda1 (2k - n - 1)
  double delta2 = 0.0;
  double theta = 0.0;
  double rabi = 0.0;      // |beta| sqrt(k (n-k+1))
  double duration = 0.0;  // theta / rabi
  double drive_phase = 0.0;  // phase of g2 on the extra qubit
  /// Relative phase the later flops of the same stage imprint on the two
  /// components of this step's subspace; pre-compensated through drive_phase.
  double pending_phase = 0.0;
  DerivedParams params;

  /// Drive settings realising this step.
  DriveConfig drive(const DriveConfig& reference) const;
};

struct ScheduleOptions {
  /// Omit steps whose source component has amplitude below 1e-12.
  bool skip_zero_amplitude = false;
  /// Fold the Stark phases of later flops into the drive phases.
  bool stark_compensation = true;
};

struct Schedule {
  std::vector<StepPlan> steps;
  DriveConfig reference;  // g1, g2 and delta1 shared by every step
  SymmetricCoefficients target;
  ScheduleOptions options;

  double total_duration() const;
};

/// Reference drive: g1 = 1, g2 = 0.1, delta1 = 20 (delta2 is solved per step).
DriveConfig reference_drive();

/// Rotation angle of the flop (n, k): arccos sqrt(C(n,k-1)/C(n+1,k)).
double flop_angle(int n, int k);

/// Collective Rabi rate |beta| sqrt(k (n-k+1)) between |D_{n,k-1}>|e> and |D_{n,k}>|g>.
double flop_rate(int n, int k, Complex beta);

/// Detuning that makes the (n, k) subspace resonant: lambda1 (2k - n - 1).
double resonant_delta(int n, int k, double lambda1);

/// Throws ConfigError for N < 2, mismatched coefficients, or N above the
/// register limit.
Schedule make_schedule(int num_qubits, const SymmetricCoefficients& c, const DriveConfig& reference = reference_drive(),
                       const ScheduleOptions& options = {});

/// Exact flop acting on the subspace of step (n, k) for every spectator
/// configuration: source -> cos(theta) source + sin(theta) e^{i phase} destination
/// (and the orthogonal completion).
StateVector ideal_transfer(const StateVector& psi, int n, int k, double phase = 0.0);

/// Applies every step as an exact flop to the staircase superposition.
StateVector ideal_protocol(const Schedule& schedule);

/// State the protocol should hold after `count` executed steps, including
/// the Stark phases still to be released by later flops of the current stage.
StateVector ideal_intermediate(const Schedule& schedule, std::size_t count, const StateVector& initial);

/// Fidelity after removing one relative phase per total-excitation sector:
/// (sum_K |<ideal_K|psi_K>|)^2. The mode (if any) of psi is kept; ideal is
/// lifted into the mode vacuum.
double sector_compensated_fidelity(const StateVector& ideal, const StateVector& psi);

/// arg <ideal_K|psi_K> for every sector K (0 where the overlap vanishes).
std::vector<double> sector_phases(const StateVector& ideal, const StateVector& psi);

enum class Backend { kEffective, kFull };
enum class Frame {
  kRotating,  // exact exponentials of the time-independent form
  kLab,       // explicit time-dependent integration, re-aligned after each step
};

struct ExecuteOptions {
  Backend backend = Backend::kEffective;
  Frame frame = Frame::kRotating;
  int boson_dim = 0;       // mode truncation, required (>= 2) for the full backend
  double max_dt = 0.02;    // integration step of the time-dependent form
  int samples_per_step = 0;  // > 0: record tracked populations
  /// Re-run with the encoder target rotated by the measured sector phases, so
  /// that the raw fidelity equals the sector-compensated one.
  bool encoder_precompensation = false;
  /// Start every step from the intended state instead of the propagated one,
  /// isolating each flop from errors carried over from earlier steps.
  bool isolated_steps = false;
  /// Full backend: evaluate tracked populations in the dressed basis of the
  /// dispersive transformation (the basis the effective model describes).
  bool dressed_observables = false;
};

struct StepRecord {
  StepPlan plan;
  double start_time = 0.0;
  double fidelity = 0.0;      // sector-compensated, against the ideal intermediate
  double raw_fidelity = 0.0;  // plain overlap with the ideal intermediate
  Trajectory trace;           // populations normalised to the sector weight
  double norm_drift = 0.0;
  double excitation_drift = 0.0;
  double max_bus_population = 0.0;
};

struct Execution {
  StateVector final_state;
  StateVector initial_state;
  std::vector<StepRecord> steps;
  double final_fidelity = 0.0;      // sector-compensated, against sum_k c_k |D_{N,k}>
  double final_raw_fidelity = 0.0;
  std::vector<double> final_sector_phases;
  double total_time = 0.0;
  double max_norm_drift = 0.0;
  double max_excitation_drift = 0.0;
  double max_bus_population = 0.0;
  double endpoint_drift = 0.0;  // change of |g...g> and |e...e> populations
};

/// Throws ConfigError for a full backend without a mode truncation >= 2 and
/// NumericalError when norm or excitation number drift beyond 1e-8.
Execution execute(const Schedule& schedule, const ExecuteOptions& options = {});

/// Names of the three tracked populations of a step.
std::vector<std::string> trace_columns(const StepPlan& step);

/// Tracked states of a step: the intended merged state, the source and the
/// destination (spectators excited, mode traced out).
std::vector<Observable> tracked_states(const StepPlan& step, int num_qubits);

/// Endpoint check of the traces: for each step, |final population - intended| of
/// the source (cos^2 theta), destination (sin^2 theta) and merged state (1).
double trace_endpoint_error(const Execution& execution);

/// Largest difference of any tracked population between two executions of the
/// same schedule sampled at the same rate. Throws ConfigError on mismatch.
double max_trace_difference(const Execution& a, const Execution& b);

struct PhysicalTiming {
  double total_seconds = 0.0;
  std::vector<double> step_seconds;
};

/// Converts every duration with a physical g1 in rad/s.
PhysicalTiming physical_units(const Schedule& schedule, double g1_angular);

/// Parses a physical rate into rad/s. Cyclic units (Hz, kHz, MHz) are
/// converted with 2pi, whether or not the text spells it out ("2pi*20kHz" and
/// "20kHz" both give 1.2566e5); "rad/s", "krad/s" and bare numbers are taken
/// as angular. Throws ConfigError.
double parse_angular_rate(const std::string& text);

/// Table of (step, delta/lambda1, g2, delta2, delta1, fidelity).
std::string table2_text(const Execution& execution, const Schedule& schedule);
std::string table2_csv(const Execution& execution, const Schedule& schedule);

}  // namespace symprep
