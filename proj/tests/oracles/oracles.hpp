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

// Independent reference implementations used only by the tests. They are
// deliberately built differently from the library code paths they check:
// dense Kronecker products instead of bit manipulation, brute-force
// enumeration instead of subset walks, bisection instead of fixed points and
// dense matrix exponentials instead of block diagonalisation.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "symprep/encoder.hpp"

namespace symprep::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// n! / (k! (n-k)!) by exact integer products.
unsigned long long choose(int n, int k);

/// |D_{n,k}> over 2^n basis states by enumerating every bit string.
Vector dicke(int n, int k);

/// sum_k c_k |D_{n,k}> by brute force.
Vector symmetric_state(const std::vector<Complex>& c);

/// Qubit-register state with the mode appended in its vacuum.
Vector with_vacuum(const Vector& qubits, int boson_dim);

Matrix kron(const Matrix& a, const Matrix& b);

/// Single-qubit operator `op` on qubit q (1 = leftmost factor) of n qubits,
/// optionally followed by a mode of `boson_dim` levels.
Matrix embed(const Matrix& op, int qubit, int num_qubits, int boson_dim = 0);

/// sigma^- = |g><e| on qubit q.
Matrix lowering(int qubit, int num_qubits, int boson_dim = 0);

/// Mode annihilation operator (identity on the qubits).
Matrix mode_lowering(int num_qubits, int boson_dim);

/// sum_{i != j} sigma_i^+ sigma_j^- over `qubits`.
Matrix exchange(const std::vector<int>& qubits, int num_qubits, int boson_dim = 0);

/// lambda1 X + beta sum_i sigma_i sigma_x^+ + h.c. - delta n_x.
Matrix effective_hamiltonian(const std::vector<int>& ensemble, int extra, int num_qubits, double lambda1,
                             Complex beta, double delta);

/// Static-frame bus Hamiltonian -delta1 a^+a + (delta2 - delta1) n_x + sum g sigma^+ a + h.c.
Matrix full_bus_hamiltonian(const std::vector<int>& ensemble, int extra, int num_qubits, int boson_dim,
                            Complex g1, Complex g2, double delta1, double delta2);

/// exp(-i H t) by the dense matrix exponential.
Matrix evolution(const Matrix& h, double t);

/// Product of the dense gate matrices of `circuit` applied to |g...g>.
Vector run_circuit(const symprep::EncodingCircuit& circuit);

/// sum_k c_k |(k)>, |(k)> having the last k qubits excited.
Vector staircase(const std::vector<Complex>& c);

/// Closed-form transfer probability of a two-level system with coupling
/// `coupling` (off-diagonal element) and energy splitting `splitting`.
double rabi_transfer(double coupling, double splitting, double t);

/// delta2 with delta1 - delta2 - g2^2/delta2 + g1^2/delta1 = target, by bisection.
double delta2_by_bisection(double target, double g2, double delta1, double g1);

/// Monic expansion prod_j (z - r_j) with ascending coefficients.
std::vector<Complex> expand_roots(const std::vector<Complex>& roots);

/// |<a|b>|^2 / (|a|^2 |b|^2).
double overlap(const Vector& a, const Vector& b);
double overlap(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace symprep::oracle
