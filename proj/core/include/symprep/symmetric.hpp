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

// Dense N-qubit (optionally qubit + one bosonic mode) state vectors, Dicke
// states and symmetric superpositions.
//
// Basis convention, shared by every module and file format:
//   * qubits are labelled 1..N; qubit 1 is the most significant bit,
//   * |g> is bit 0 and |e> is bit 1,
//   * the boson occupation m (when a mode is present) is the least
//     significant "digit": index = bits * boson_dim + m.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symprep/common.hpp"

namespace symprep {

struct DickeLabel {
  int n = 1;
  int k = 0;
};

// Throws std::domain_error unless 0 <= k <= n and n >= 0.
void validate(const DickeLabel& label);

double binomial(int n, int k);

/// Normalisation of |D_{n,k}>: the square root of the number of basis states
/// with k excitations among n qubits.
double dicke_norm(int n, int k);

/// Coefficients c_0..c_N of sum_k c_k |D_{N,k}>, normalised on construction.
class SymmetricCoefficients {
 public:
  explicit SymmetricCoefficients(std::vector<Complex> values);
  static SymmetricCoefficients from_real(const std::vector<double>& values);
  /// Single Dicke component |D_{n,k}>.
  static SymmetricCoefficients basis(int n, int k);

  int num_qubits() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator[](int k) const { return values_.at(static_cast<std::size_t>(k)); }

 private:
  std::vector<Complex> values_;
};

struct RegisterShape {
  int num_qubits = 0;
  int boson_dim = 0;  // 0: no mode

  std::size_t qubit_dim() const { return std::size_t{1} << num_qubits; }
  std::size_t boson_levels() const { return boson_dim > 0 ? static_cast<std::size_t>(boson_dim) : 1; }
  std::size_t dim() const { return qubit_dim() * boson_levels(); }

  std::size_t index(std::uint64_t bits, int boson = 0) const {
    return static_cast<std::size_t>(bits) * boson_levels() + static_cast<std::size_t>(boson);
  }
  std::uint64_t bits_of(std::size_t index) const { return index / boson_levels(); }
  int boson_of(std::size_t index) const { return static_cast<int>(index % boson_levels()); }
  /// Mask of qubit q (1-based) inside the bit pattern.
  std::uint64_t mask(int qubit) const { return std::uint64_t{1} << (num_qubits - qubit); }
  bool excited(std::size_t index, int qubit) const { return (bits_of(index) & mask(qubit)) != 0; }
  /// Qubit excitations plus boson quanta.
  int excitations(std::size_t index) const;

  friend bool operator==(const RegisterShape&, const RegisterShape&) = default;
};

// Throws ConfigError for qubit counts outside [1, kMaxQubits] or negative
// boson dimension.
void validate(const RegisterShape& shape);

class StateVector {
 public:
  StateVector(RegisterShape shape, CVector amplitudes);

  static StateVector zero(RegisterShape shape);
  static StateVector basis(RegisterShape shape, std::uint64_t bits, int boson = 0);
  static StateVector ground(int num_qubits, int boson_dim = 0);
  /// Product state from a string of 'g'/'e', qubit 1 first.
  static StateVector from_string(std::string_view pattern, int boson_dim = 0);

  const RegisterShape& shape() const { return shape_; }
  int num_qubits() const { return shape_.num_qubits; }
  int boson_dim() const { return shape_.boson_dim; }
  std::size_t dim() const { return shape_.dim(); }
  /// Qubit identities 1..N.
  std::vector<int> qubit_labels() const;

  const CVector& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_[static_cast<Eigen::Index>(index)]; }
  double norm() const { return amplitudes_.norm(); }

  StateVector normalized() const;
  /// Same qubit content with the mode appended in its vacuum (boson_dim >= 1).
  StateVector with_boson(int boson_dim) const;

 private:
  RegisterShape shape_;
  CVector amplitudes_;
};

/// |D_{N,k}> on the whole register, mode (if any) in vacuum.
StateVector dicke_state(const DickeLabel& label, int boson_dim = 0);

/// Dicke state |D_{|ensemble|,k}> on the listed qubits tensored with fixed
/// values on the other qubits. Qubits not in `ensemble` and not in `fixed`
/// are taken as |g>.
StateVector embedded_dicke(RegisterShape shape, std::span<const int> ensemble, int k,
                           std::span<const std::pair<int, bool>> fixed = {});

struct BranchAmplitudes {
  double excited = 0.0;  // d_{N-1,k-1}/d_{N,k}: weight of |D_{N-1,k-1}>|e>
  double ground = 0.0;   // d_{N-1,k}/d_{N,k}: weight of |D_{N-1,k}>|g>
};

/// Splitting of |D_{N,k}> on its last qubit. Edge cases k = 0 and k = N have a
/// single nonvanishing branch.
BranchAmplitudes recursion_amplitudes(int n, int k);

StateVector assemble_symmetric(const SymmetricCoefficients& c, int boson_dim = 0);

/// |(k)> = |g...g e...e> with the last k qubits excited.
StateVector staircase_basis_state(int n, int k, int boson_dim = 0);

Complex inner_product(const StateVector& bra, const StateVector& ket);

/// |<psi|phi>|^2; throws std::invalid_argument when register shapes differ.
double fidelity(const StateVector& psi, const StateVector& phi);

/// Projections c_k = <D_{N,k}|psi> of a qubit-only state (not renormalised).
std::vector<Complex> dicke_components(const StateVector& psi);

/// Population of the qubit-only state `target` in `psi`; the mode of `psi`,
/// if present, is traced out.
double population(const StateVector& target, const StateVector& psi);

}  // namespace symprep
