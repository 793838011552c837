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


#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "symprep/fock_route.hpp"

namespace symprep {
namespace {

std::vector<Complex> random_coefficients(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> c(static_cast<std::size_t>(n + 1));
  for (auto& z : c) z = Complex(gauss(rng), gauss(rng));
  return c;
}

CVector fock(int level, int truncation) {
  CVector v = CVector::Zero(truncation);
  v[level] = 1.0;
  return v;
}

// Dense exponentials of the carrier and sideband Hamiltonians on ancilla + mode.
oracle::Vector forward_oracle(const PulseSequence& seq, int levels) {
  const oracle::Matrix raise = oracle::lowering(1, 1, levels).adjoint();
  const oracle::Matrix a = oracle::mode_lowering(1, levels);
  oracle::Vector psi = oracle::Vector::Zero(2 * levels);
  psi[0] = seq.global_phase;
  for (const Pulse& p : seq.pulses) {
    const oracle::Matrix op = p.kind == PulseKind::kCarrier ? raise : oracle::Matrix(raise * a);
    const oracle::Matrix h = std::polar(1.0, p.phi) * op + std::polar(1.0, -p.phi) * op.adjoint();
    psi = oracle::evolution(h, p.theta) * psi;
  }
  return psi;
}

TEST(LawEberly, VacuumNeedsNoPulses) {
  const PulseSequence seq = law_eberly_synthesize(SymmetricCoefficients::basis(5, 0));
  EXPECT_TRUE(seq.pulses.empty());
  EXPECT_EQ(seq.max_level, 0);
}

TEST(LawEberly, SingleQuantumSuperposition) {
  const SymmetricCoefficients c = SymmetricCoefficients::from_real({1, 1});
  const PulseSequence seq = law_eberly_synthesize(c);
  ASSERT_EQ(seq.pulses.size(), 2u);
  int carriers = 0;
  for (const Pulse& p : seq.pulses) carriers += p.kind == PulseKind::kCarrier ? 1 : 0;
  EXPECT_EQ(carriers, 1);
  EXPECT_LT((forward_oracle(seq, 3) - fock_target(c, 3).amplitudes()).norm(), 1e-10);
}

TEST(LawEberly, RandomTargetsAreExact) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 10;
    const SymmetricCoefficients c(random_coefficients(rng, n));
    const PulseSequence seq = law_eberly_synthesize(c);
    EXPECT_LE(seq.pulses.size(), static_cast<std::size_t>(2 * n + 1));
    const int levels = n + 2;
    EXPECT_LT((apply_pulses(seq, levels).amplitudes() - fock_target(c, levels).amplitudes()).norm(), 1e-10);
    EXPECT_LT((forward_oracle(seq, levels) - fock_target(c, levels).amplitudes()).norm(), 1e-10);
  }
}

TEST(LawEberly, SidebandPulsesConserveExcitations) {
  std::mt19937_64 rng(32);
  std::normal_distribution<double> gauss;
  const RegisterShape shape{1, 6};
  CVector amps(static_cast<Eigen::Index>(shape.dim()));
  for (auto& z : amps) z = Complex(gauss(rng), gauss(rng));
  const StateVector psi = StateVector(shape, amps).normalized();
  PulseSequence seq;
  seq.pulses = {Pulse{PulseKind::kSideband, 0.7, 0.3}, Pulse{PulseKind::kSideband, 1.9, -2.0}};
  const StateVector out = apply_pulses(seq, psi);
  EXPECT_LT(excitation_drift(psi, out), 1e-10);
  EXPECT_NEAR(out.norm(), 1.0, 1e-12);
}

TEST(LawEberly, RejectsSmallTruncation) {
  const PulseSequence seq = law_eberly_synthesize(SymmetricCoefficients::basis(4, 4));
  EXPECT_THROW(apply_pulses(seq, 4), ConfigError);
  EXPECT_THROW(fock_target(SymmetricCoefficients::basis(4, 4), 4), ConfigError);
}

TEST(ChirpProfile, ShapeAndValidation) {
  const ChirpProfile p;
  EXPECT_NEAR(p.rate(0.0), 0.0, 1e-15);
  EXPECT_NEAR(p.rate(20.0), 1.0, 1e-15);
  EXPECT_NEAR(p.detuning(0.0, 4), 10.0, 1e-12);
  EXPECT_NEAR(p.detuning(40.0, 4), -10.0, 1e-12);
  EXPECT_EQ(p.slices(), 4000);
  ChirpProfile bad;
  bad.duration = -1.0;
  EXPECT_THROW(validate(bad, 3), ConfigError);
  ChirpProfile strict;
  strict.adiabaticity_threshold = 1e6;
  EXPECT_THROW(validate(strict, 3), ConfigError);
  EXPECT_GT(adiabaticity_metric(ChirpProfile{}, 10), 1.0);
}

TEST(AdiabaticMap, VacuumSectorIsExact) {
  const AdiabaticResult r = adiabatic_map(4, ChirpProfile{}, fock(0, 6), 6);
  EXPECT_DOUBLE_EQ(r.fidelity_raw, 1.0);
  EXPECT_DOUBLE_EQ(r.fidelity_phase_corrected, 1.0);
}

TEST(AdiabaticMap, DickeTenTwoDefaultProfile) {
  const AdiabaticResult r = adiabatic_map(10, ChirpProfile{}, fock(2, 12), 12);
  EXPECT_GE(r.fidelity_phase_corrected, 0.97);
  const StateVector target = dicke_state({10, 2}, 12);
  EXPECT_NEAR(population(target, r.final_state), r.fidelity_raw, 1e-10);
}

TEST(AdiabaticMap, SmallInstanceInAdiabaticLimit) {
  ChirpProfile slow;
  slow.duration = 200.0;
  slow.time_step = 0.05;
  EXPECT_GE(adiabatic_map(2, slow, fock(1, 4), 4).fidelity_phase_corrected, 0.99);
}

TEST(AdiabaticMap, SectorChainsMatchFullRegister) {
  ChirpProfile p;
  p.duration = 12.0;
  p.time_step = 0.02;
  const int n = 3;
  const int levels = 5;
  CVector mode = CVector::Zero(levels);
  mode << Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.4, -0.3), Complex(0.2, 0.5), 0.0;
  mode.normalize();
  const AdiabaticResult chains = adiabatic_map(n, p, mode, levels);
  const StateVector full = adiabatic_map_register(n, p, mode, levels);
  EXPECT_LT((chains.final_state.amplitudes() - full.amplitudes()).norm(), 1e-10);
  const StateVector start = StateVector(RegisterShape{n, levels}, [&] {
    CVector v = CVector::Zero(static_cast<Eigen::Index>(RegisterShape{n, levels}.dim()));
    v.head(levels) = mode;
    return v;
  }());
  EXPECT_LT(excitation_drift(start, full), 1e-10);
  EXPECT_NEAR(full.norm(), 1.0, 1e-10);
}

TEST(AdiabaticMap, SectorFidelityGrowsWithDuration) {
  const int n = 4;
  for (int k = 1; k <= n; ++k) {
    double previous = 0.0;
    for (double t : {10.0, 20.0, 40.0}) {
      ChirpProfile p;
      p.duration = t;
      const AdiabaticResult r = adiabatic_map(n, p, fock(k, n + 2), n + 2);
      EXPECT_GE(r.fidelity_raw + 1e-9, previous) << "k=" << k << " T=" << t;
      previous = r.fidelity_raw;
    }
  }
}

TEST(AdiabaticMap, SuperpositionBoundedBySectorProduct) {
  ChirpProfile p;
  p.duration = 15.0;
  p.time_step = 0.02;
  std::mt19937_64 rng(33);
  for (int n = 2; n <= 6; ++n) {
    const SymmetricCoefficients c(random_coefficients(rng, n));
    CVector mode = CVector::Zero(n + 2);
    for (int k = 0; k <= n; ++k) mode[k] = c[k];
    const AdiabaticResult r = adiabatic_map(n, p, mode, n + 2);
    double product = 1.0;
    for (int k = 0; k <= n; ++k) product *= adiabatic_map(n, p, fock(k, n + 2), n + 2).fidelity_raw;
    EXPECT_GE(r.fidelity_phase_corrected, product - 1e-3) << "N=" << n;
  }
}

TEST(AdiabaticMap, RejectsBadModeStates) {
  EXPECT_THROW(adiabatic_map(4, ChirpProfile{}, fock(0, 4), 4), ConfigError);
  CVector crowded = fock(5, 6);
  EXPECT_THROW(adiabatic_map(4, ChirpProfile{}, crowded, 6), ConfigError);
  EXPECT_THROW(adiabatic_map(4, ChirpProfile{}, CVector::Zero(6), 6), ConfigError);
}

TEST(FockRoute, VacuumTarget) {
  const FockRouteResult r = fock_route_prepare(SymmetricCoefficients::basis(4, 0));
  EXPECT_TRUE(r.pulses.pulses.empty());
  EXPECT_NEAR(r.fidelity_raw, 1.0, 1e-15);
}

TEST(FockRoute, ReferenceSuperposition) {
  const FockRouteResult r = fock_route_prepare(SymmetricCoefficients::from_real({1, 2, 3, 4, 5}));
  EXPECT_LT(r.synthesis_error, 1e-10);
  EXPECT_GE(r.fidelity_phase_corrected, 0.95);
  EXPECT_LE(r.fidelity_raw, r.fidelity_phase_corrected + 1e-12);
}

TEST(FockRoute, SingleDickeMatchesAdiabaticMap) {
  const FockRouteResult r = fock_route_prepare(SymmetricCoefficients::basis(10, 2), ChirpProfile{}, 12);
  const AdiabaticResult direct = adiabatic_map(10, ChirpProfile{}, fock(2, 12), 12);
  EXPECT_NEAR(r.fidelity_phase_corrected, direct.fidelity_phase_corrected, 1e-10);
  EXPECT_GE(r.fidelity_phase_corrected, 0.97);
}

}  // namespace
}  // namespace symprep
