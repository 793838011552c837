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

// Staircase encoding: an unconditional rotation on the last qubit followed by
// a chain of rotations, each conditioned on the right neighbour being |e>,
// maps |g...g> to sum_k c_k |(k)>.

#include <optional>
#include <vector>

#include "symprep/symmetric.hpp"

namespace symprep {

/// Rotation |g> -> alpha|g> + beta|e>, |e> -> -conj(beta)|g> + conj(alpha)|e>.
struct RotationPair {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};

  bool is_identity(double tol = 1e-15) const {
    return std::abs(beta) <= tol && std::abs(alpha - Complex(1.0, 0.0)) <= tol;
  }
};

struct Gate {
  std::optional<int> control;  // fires on |e>
  int target = 0;
  RotationPair rotation;
};

struct EncodingCircuit {
  int num_qubits = 0;
  std::vector<Gate> gates;
};

/// Pairs (alpha_m, beta_m), m = 0..N-1, reproducing c_m = beta_0...beta_{m-1} alpha_m
/// and c_N = beta_0...beta_{N-1}. Zero tails are padded with identity pairs.
std::vector<RotationPair> staircase_decompose(const SymmetricCoefficients& c);

/// Pair m drives qubit N-m; pair 0 is unconditional, pair m >= 1 is controlled
/// by qubit N-m+1. Throws std::invalid_argument for more than N pairs.
EncodingCircuit build_circuit(const std::vector<RotationPair>& pairs, int num_qubits);

/// Applies the circuit to an arbitrary register state (the mode, if present,
/// is untouched).
StateVector apply_circuit(const EncodingCircuit& circuit, const StateVector& psi);

/// sum_k c_k |(k)>, built directly.
StateVector staircase_superposition(const SymmetricCoefficients& c, int boson_dim = 0);

}  // namespace symprep
