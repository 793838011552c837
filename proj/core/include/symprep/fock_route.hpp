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

// Alternative preparation route: synthesise sum_k c_k |k> in a bosonic mode
// with carrier and sideband pulses on an ancilla qubit, then map every Fock
// state |k> onto |D_{N,k}> with a chirped collective red-sideband sweep.

#include <vector>

#include "symprep/dynamics.hpp"
#include "symprep/symmetric.hpp"

namespace symprep {

enum class PulseKind { kCarrier, kSideband };

/// Carrier:  exp(-i theta (e^{i phi} sigma^+ + h.c.)).
/// Sideband: exp(-i theta (e^{i phi} sigma^+ a + h.c.)), rotating |g,m> <-> |e,m-1>
///           by theta sqrt(m).
struct Pulse {
  PulseKind kind = PulseKind::kCarrier;
  double theta = 0.0;
  double phi = 0.0;
};

struct PulseSequence {
  std::vector<Pulse> pulses;
  /// Global phase separating the forward sequence from the exact target.
  Complex global_phase{1.0, 0.0};
  /// Highest Fock level the sequence populates.
  int max_level = 0;
};

/// Backward construction: empties the highest Fock level with a sideband and
/// then a carrier pulse until the vacuum is reached; returns the forward
/// sequence. Zero-angle pulses are dropped, so the length is at most 2N.
PulseSequence law_eberly_synthesize(const SymmetricCoefficients& c);

/// Applies the pulses to |g> (x) |0> on a register of one ancilla and a mode of
/// `mode_dim` levels, including the global phase. Throws ConfigError if the
/// mode is too small for the sequence.
StateVector apply_pulses(const PulseSequence& sequence, int mode_dim);
/// Applies the pulses to an arbitrary ancilla + mode state.
StateVector apply_pulses(const PulseSequence& sequence, const StateVector& psi);

/// sum_k c_k |g,k>, the synthesis target on one ancilla and the mode.
StateVector fock_target(const SymmetricCoefficients& c, int mode_dim);

/// Linear detuning sweep from +sweep_factor g sqrt(N) to -sweep_factor g sqrt(N)
/// under a sin^2 envelope of peak collective rate g, over `duration`.
struct ChirpProfile {
  double peak_rate = 1.0;
  double sweep_factor = 5.0;
  double duration = 40.0;
  double time_step = 0.01;  // slice length of the piecewise integration
  double adiabaticity_threshold = 0.0;

  double sweep_range(int num_qubits) const;
  double rate(double t) const;
  double detuning(double t, int num_qubits) const;
  int slices() const;
};

/// min_t gap(t)^2 / |d detuning / dt| for the hardest (k = N) sector.
double adiabaticity_metric(const ChirpProfile& profile, int num_qubits);

/// Throws ConfigError for non-positive parameters or a metric below the
/// profile's threshold.
void validate(const ChirpProfile& profile, int num_qubits);

/// Sweep Hamiltonian on N qubits and the mode:
///   detuning(t) * (sum_q n_q) + rate(t) sum_q (sigma_q^+ a + h.c.).
Hamiltonian chirp_hamiltonian(const RegisterShape& shape, const ChirpProfile& profile, double t);

struct AdiabaticResult {
  StateVector final_state;  // N qubits and the mode
  /// Amplitude on |D_{N,k}> (x) |0> of each single-sector run started in |k>.
  std::vector<Complex> sector_amplitudes;
  double fidelity_raw = 0.0;
  double fidelity_phase_corrected = 0.0;
};

/// Maps a mode state (amplitudes over Fock levels, qubits in |g...g>) with
/// the chirp. Each sector evolves independently in its Dicke (x) Fock basis;
/// fidelities are against sum_k m_k |D_{N,k}> (x) |0>, raw and with every
/// sector's phase taken from its reference run. Throws ConfigError if the
/// truncation is below N+1 or the mode state has a different length.
AdiabaticResult adiabatic_map(int num_qubits, const ChirpProfile& profile, const CVector& mode_state, int truncation);

/// Same sweep integrated on the full qubit register (exponential of the
/// piecewise-constant Hamiltonian); for cross-checks at small N.
StateVector adiabatic_map_register(int num_qubits, const ChirpProfile& profile, const CVector& mode_state,
                                   int truncation);

struct FockRouteResult {
  PulseSequence pulses;
  double synthesis_error = 0.0;  // |forward state - target| of the pulse stage
  AdiabaticResult mapping;
  double fidelity_raw = 0.0;
  double fidelity_phase_corrected = 0.0;
};

/// Synthesis followed by the adiabatic map; the mode truncation defaults to N+2.
FockRouteResult fock_route_prepare(const SymmetricCoefficients& c, const ChirpProfile& profile = {},
                                   int truncation = 0);

}  // namespace symprep
