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

#include "symprep/symmetric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace symprep {

void validate(const DickeLabel& label) {
  if (label.n < 0 || label.k < 0 || label.k > label.n) {
    throw std::domain_error("Dicke label requires 0 <= k <= n, got n=" + std::to_string(label.n) +
                            " k=" + std::to_string(label.k));
  }
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return std::round(result);
}

double dicke_norm(int n, int k) {
  validate(DickeLabel{n, k});
  return std::sqrt(binomial(n, k));
}

SymmetricCoefficients::SymmetricCoefficients(std::vector<Complex> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw ConfigError("symmetric coefficients need N+1 >= 2 entries");
  double norm2 = 0.0;
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ConfigError("non-finite coefficient");
    norm2 += std::norm(v);
  }
  if (norm2 <= 0.0) throw ConfigError("symmetric coefficients are all zero");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& v : values_) v *= inv;
}

SymmetricCoefficients SymmetricCoefficients::from_real(const std::vector<double>& values) {
  return SymmetricCoefficients(std::vector<Complex>(values.begin(), values.end()));
}

SymmetricCoefficients SymmetricCoefficients::basis(int n, int k) {
  validate(DickeLabel{n, k});
  if (n < 1) throw std::domain_error("symmetric state needs at least one qubit");
  std::vector<Complex> values(static_cast<std::size_t>(n) + 1, 0.0);
  values[static_cast<std::size_t>(k)] = 1.0;
  return SymmetricCoefficients(std::move(values));
}

int RegisterShape::excitations(std::size_t index) const {
  return std::popcount(bits_of(index)) + boson_of(index);
}

void validate(const RegisterShape& shape) {
  if (shape.num_qubits < 1 || shape.num_qubits > kMaxQubits) {
    throw ConfigError("qubit count must lie in [1, " + std::to_string(kMaxQubits) + "], got " +
                      std::to_string(shape.num_qubits));
  }
  if (shape.boson_dim < 0) throw ConfigError("boson dimension must be non-negative");
}

StateVector::StateVector(RegisterShape shape, CVector amplitudes)
    : shape_(shape), amplitudes_(std::move(amplitudes)) {
  validate(shape_);
  if (static_cast<std::size_t>(amplitudes_.size()) != shape_.dim()) {
    throw std::invalid_argument("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                                ", register needs " + std::to_string(shape_.dim()));
  }
}

StateVector StateVector::zero(RegisterShape shape) {
  validate(shape);
  return StateVector(shape, CVector::Zero(static_cast<Eigen::Index>(shape.dim())));
}

StateVector StateVector::basis(RegisterShape shape, std::uint64_t bits, int boson) {
  validate(shape);
  if (bits >= shape.qubit_dim() || boson < 0 || static_cast<std::size_t>(boson) >= shape.boson_levels()) {
    throw std::out_of_range("basis state outside register");
  }
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(shape.dim()));
  amps[static_cast<Eigen::Index>(shape.index(bits, boson))] = 1.0;
  return StateVector(shape, std::move(amps));
}

StateVector StateVector::ground(int num_qubits, int boson_dim) {
  return basis(RegisterShape{num_qubits, boson_dim}, 0);
}

StateVector StateVector::from_string(std::string_view pattern, int boson_dim) {
  std::uint64_t bits = 0;
  for (char ch : pattern) {
    if (ch != 'g' && ch != 'e') throw ConfigError("product state pattern may only contain 'g' and 'e'");
    bits = (bits << 1) | (ch == 'e' ? 1U : 0U);
  }
  return basis(RegisterShape{static_cast<int>(pattern.size()), boson_dim}, bits);
}

std::vector<int> StateVector::qubit_labels() const {
  std::vector<int> labels(static_cast<std::size_t>(shape_.num_qubits));
  std::iota(labels.begin(), labels.end(), 1);
  return labels;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NumericalError("cannot normalise the zero vector");
  return StateVector(shape_, amplitudes_ / n);
}

StateVector StateVector::with_boson(int boson_dim) const {
  if (shape_.boson_dim != 0) throw std::invalid_argument("state already carries a mode");
  if (boson_dim < 1) throw ConfigError("boson dimension must be at least 1");
  RegisterShape shape{shape_.num_qubits, boson_dim};
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(shape.dim()));
  for (std::size_t bits = 0; bits < shape_.qubit_dim(); ++bits) {
    amps[static_cast<Eigen::Index>(shape.index(bits, 0))] = amplitudes_[static_cast<Eigen::Index>(bits)];
  }
  return StateVector(shape, std::move(amps));
}

StateVector embedded_dicke(RegisterShape shape, std::span<const int> ensemble, int k,
                           std::span<const std::pair<int, bool>> fixed) {
  validate(shape);
  const int n = static_cast<int>(ensemble.size());
  validate(DickeLabel{n, k});
  std::uint64_t ensemble_mask = 0;
  for (int q : ensemble) {
    if (q < 1 || q > shape.num_qubits) throw std::out_of_range("ensemble qubit outside register");
    if ((ensemble_mask & shape.mask(q)) != 0) throw std::invalid_argument("repeated ensemble qubit");
    ensemble_mask |= shape.mask(q);
  }
  std::uint64_t base = 0;
  for (const auto& [q, excited] : fixed) {
    if (q < 1 || q > shape.num_qubits) throw std::out_of_range("fixed qubit outside register");
    if ((ensemble_mask & shape.mask(q)) != 0) throw std::invalid_argument("fixed qubit overlaps the ensemble");
    if (excited) base |= shape.mask(q);
  }
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(shape.dim()));
  const double amp = 1.0 / dicke_norm(n, k);
  // Walk the subsets of ensemble_mask.
  std::uint64_t sub = ensemble_mask;
  while (true) {
    if (std::popcount(sub) == k) amps[static_cast<Eigen::Index>(shape.index(base | sub, 0))] = amp;
    if (sub == 0) break;
    sub = (sub - 1) & ensemble_mask;
  }
  return StateVector(shape, std::move(amps));
}

StateVector dicke_state(const DickeLabel& label, int boson_dim) {
  validate(label);
  RegisterShape shape{label.n, boson_dim};
  std::vector<int> all(static_cast<std::size_t>(label.n));
  std::iota(all.begin(), all.end(), 1);
  return embedded_dicke(shape, all, label.k);
}

BranchAmplitudes recursion_amplitudes(int n, int k) {
  validate(DickeLabel{n, k});
  if (n < 1) throw std::domain_error("recursion needs n >= 1");
  const double d = dicke_norm(n, k);
  BranchAmplitudes out;
  out.excited = k >= 1 ? dicke_norm(n - 1, k - 1) / d : 0.0;
  out.ground = k <= n - 1 ? dicke_norm(n - 1, k) / d : 0.0;
  return out;
}

StateVector assemble_symmetric(const SymmetricCoefficients& c, int boson_dim) {
  const int n = c.num_qubits();
  RegisterShape shape{n, boson_dim};
  validate(shape);
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(shape.dim()));
  std::vector<double> per_weight(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) per_weight[static_cast<std::size_t>(k)] = 1.0 / dicke_norm(n, k);
  for (std::uint64_t bits = 0; bits < shape.qubit_dim(); ++bits) {
    const int k = std::popcount(bits);
    amps[static_cast<Eigen::Index>(shape.index(bits, 0))] = c[k] * per_weight[static_cast<std::size_t>(k)];
  }
  return StateVector(shape, std::move(amps));
}

StateVector staircase_basis_state(int n, int k, int boson_dim) {
  validate(DickeLabel{n, k});
  const std::uint64_t bits = (std::uint64_t{1} << k) - 1;
  return StateVector::basis(RegisterShape{n, boson_dim}, bits);
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
  if (!(bra.shape() == ket.shape())) throw std::invalid_argument("register shapes differ");
  return bra.amplitudes().dot(ket.amplitudes());
}

double fidelity(const StateVector& psi, const StateVector& phi) {
  return std::norm(inner_product(psi, phi));
}

std::vector<Complex> dicke_components(const StateVector& psi) {
  if (psi.boson_dim() != 0) throw std::invalid_argument("Dicke components need a qubit-only state");
  const int n = psi.num_qubits();
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::uint64_t bits = 0; bits < psi.shape().qubit_dim(); ++bits) {
    out[static_cast<std::size_t>(std::popcount(bits))] += psi.amplitude(bits);
  }
  for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] /= dicke_norm(n, k);
  return out;
}

double population(const StateVector& target, const StateVector& psi) {
  if (target.num_qubits() != psi.num_qubits()) throw std::invalid_argument("qubit counts differ");
  if (target.boson_dim() == psi.boson_dim()) return fidelity(target, psi);
  if (target.boson_dim() != 0) throw std::invalid_argument("target must be qubit-only or match the register");
  const auto& shape = psi.shape();
  double total = 0.0;
  for (std::size_t m = 0; m < shape.boson_levels(); ++m) {
    Complex overlap = 0.0;
    for (std::uint64_t bits = 0; bits < shape.qubit_dim(); ++bits) {
      overlap += std::conj(target.amplitude(bits)) * psi.amplitude(shape.index(bits, static_cast<int>(m)));
    }
    total += std::norm(overlap);
  }
  return total;
}

}  // namespace symprep
