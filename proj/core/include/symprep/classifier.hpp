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

// Symmetric-state entanglement classes from the roots of the Majorana
// polynomial p(z) = sum_k c_k sqrt(C(N,k)) z^k. A polynomial of degree d < N
// has N - d roots at infinity; the multiplicities of the N extended roots label
// the class.

#include <string>
#include <vector>

#include "symprep/symmetric.hpp"

namespace symprep {

struct ExtendedRoot {
  Complex value{};
  bool at_infinity = false;
};

/// a_k = c_k sqrt(C(N,k)).
std::vector<Complex> majorana_coefficients(const SymmetricCoefficients& c);

/// Finite roots (companion-matrix eigenvalues, each polished by one guarded
/// Newton step) followed by the roots at infinity.
std::vector<ExtendedRoot> majorana_roots(const SymmetricCoefficients& c);

/// Distance on the Riemann sphere; 2 between antipodes, 0 for equal points.
double chordal_distance(const ExtendedRoot& a, const ExtendedRoot& b);

struct DegeneracyConfig {
  std::vector<int> multiplicities;  // descending, sums to N
  bool marginal = false;            // a decision lay within a factor 100 of a threshold

  int num_qubits() const;
  bool separable() const { return multiplicities.size() == 1; }
  /// "D_{3,1}", with ", separable" appended for a single cluster.
  std::string label() const;
};

struct ClusterOptions {
  double rel_tol = 1e-6;        // single-linkage threshold in chordal distance
  double backward_tol = 1e-10;  // merge clusters that an O(backward_tol) perturbation would fuse
};

/// Single-linkage clustering in chordal distance. Only the geometry of the
/// roots is used.
DegeneracyConfig degeneracy_config(const std::vector<ExtendedRoot>& roots, double rel_tol = 1e-6);

/// Chordal clustering followed by merging of neighbouring clusters whenever
/// the coefficients lie within backward_tol (in coefficient norm) of a state
/// with a single root of the combined multiplicity at their centroid.
DegeneracyConfig degeneracy_config(const std::vector<ExtendedRoot>& roots, const SymmetricCoefficients& c,
                                   const ClusterOptions& options = {});

/// Distance (in coefficient norm) from c to the nearest state having a root of
/// multiplicity m at z (or at infinity).
double multiple_root_distance(const SymmetricCoefficients& c, const ExtendedRoot& z, int multiplicity);

/// Elementary symmetric functions of the finite roots; roots at infinity lower
/// the degree. Throws std::invalid_argument unless exactly N roots are given.
SymmetricCoefficients coefficients_from_roots(const std::vector<ExtendedRoot>& roots, int num_qubits);

struct Classification {
  DegeneracyConfig config;
  std::vector<ExtendedRoot> roots;
  std::string label;
};

Classification classify(const SymmetricCoefficients& c, const ClusterOptions& options = {});

/// Coefficients of the state obtained by applying the invertible 2x2 matrix A
/// (columns: images of |g> and |e>) to every qubit; each root w moves to the
/// Moebius image z = (A00 w - A01) / (A11 - A10 w).
SymmetricCoefficients apply_symmetric_operation(const SymmetricCoefficients& c, const Eigen::Matrix2cd& a);

/// The Moebius image of one extended root under apply_symmetric_operation.
ExtendedRoot moebius_image(const ExtendedRoot& z, const Eigen::Matrix2cd& a);

}  // namespace symprep
