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

#include "symprep/encoder.hpp"

#include <cmath>
#include <stdexcept>

namespace symprep {
namespace {

// Below this tail norm the remaining coefficients are treated as absent.
constexpr double kZeroTail = 1e-300;

}  // namespace

std::vector<RotationPair> staircase_decompose(const SymmetricCoefficients& c) {
  const int n = c.num_qubits();
  std::vector<double> tail(static_cast<std::size_t>(n) + 2, 0.0);
  for (int m = n; m >= 0; --m) {
    tail[static_cast<std::size_t>(m)] = std::hypot(tail[static_cast<std::size_t>(m) + 1], std::abs(c[m]));
  }
  std::vector<RotationPair> pairs(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    const double t = tail[static_cast<std::size_t>(m)];
    if (t <= kZeroTail) break;  // identity from here on
    RotationPair& p = pairs[static_cast<std::size_t>(m)];
    p.alpha = c[m] / t;
    p.beta = (m == n - 1) ? c[n] / t : Complex(tail[static_cast<std::size_t>(m) + 1] / t, 0.0);
  }
  return pairs;
}

EncodingCircuit build_circuit(const std::vector<RotationPair>& pairs, int num_qubits) {
  validate(RegisterShape{num_qubits, 0});
  if (pairs.size() > static_cast<std::size_t>(num_qubits)) {
    throw std::invalid_argument("staircase circuit on " + std::to_string(num_qubits) + " qubits takes at most " +
                                std::to_string(num_qubits) + " rotation pairs, got " + std::to_string(pairs.size()));
  }
  EncodingCircuit circuit{num_qubits, {}};
  for (std::size_t m = 0; m < pairs.size(); ++m) {
    Gate gate;
    gate.target = num_qubits - static_cast<int>(m);
    if (m > 0) gate.control = gate.target + 1;
    gate.rotation = pairs[m];
    circuit.gates.push_back(gate);
  }
  return circuit;
}

StateVector apply_circuit(const EncodingCircuit& circuit, const StateVector& psi) {
  if (circuit.num_qubits != psi.num_qubits()) {
    throw std::invalid_argument("circuit acts on " + std::to_string(circuit.num_qubits) + " qubits, state has " +
                                std::to_string(psi.num_qubits()));
  }
  const RegisterShape& shape = psi.shape();
  CVector amps = psi.amplitudes();
  for (const Gate& gate : circuit.gates) {
    if (gate.target < 1 || gate.target > shape.num_qubits ||
        (gate.control && (*gate.control < 1 || *gate.control > shape.num_qubits || *gate.control == gate.target))) {
      throw std::invalid_argument("gate addresses a qubit outside the register");
    }
    const std::uint64_t tmask = shape.mask(gate.target);
    const std::uint64_t cmask = gate.control ? shape.mask(*gate.control) : 0;
    const Complex a = gate.rotation.alpha;
    const Complex b = gate.rotation.beta;
    for (std::uint64_t bits = 0; bits < shape.qubit_dim(); ++bits) {
      if ((bits & tmask) != 0 || (bits & cmask) != cmask) continue;
      for (std::size_t m = 0; m < shape.boson_levels(); ++m) {
        const auto ig = static_cast<Eigen::Index>(shape.index(bits, static_cast<int>(m)));
        const auto ie = static_cast<Eigen::Index>(shape.index(bits | tmask, static_cast<int>(m)));
        const Complex vg = amps[ig];
        const Complex ve = amps[ie];
        amps[ig] = a * vg - std::conj(b) * ve;
        amps[ie] = b * vg + std::conj(a) * ve;
      }
    }
  }
  return StateVector(shape, std::move(amps));
}

StateVector staircase_superposition(const SymmetricCoefficients& c, int boson_dim) {
  const int n = c.num_qubits();
  StateVector out = StateVector::zero(RegisterShape{n, boson_dim});
  CVector amps = out.amplitudes();
  for (int k = 0; k <= n; ++k) {
    const std::uint64_t bits = (std::uint64_t{1} << k) - 1;
    amps[static_cast<Eigen::Index>(out.shape().index(bits, 0))] = c[k];
  }
  return StateVector(out.shape(), std::move(amps));
}

}  // namespace symprep
