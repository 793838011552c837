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


// Acceptance report: one PASS/FAIL line per criterion, each with its measured
// values and runtime budget. Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "symprep/classifier.hpp"
#include "symprep/compiler.hpp"
#include "symprep/encoder.hpp"
#include "symprep/fock_route.hpp"

namespace {

using namespace symprep;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::vector<Complex> random_coefficients(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> c(static_cast<std::size_t>(n + 1));
  for (auto& z : c) z = Complex(gauss(rng), gauss(rng));
  return c;
}

SymmetricCoefficients reference_target() { return SymmetricCoefficients::from_real({1, 2, 3, 4, 5}); }

// Conservation bookkeeping shared by every integration of the report.
struct Conservation {
  double norm = 0.0;
  double excitation = 0.0;
  std::vector<std::string> sources;

  void add(const std::string& name, const Execution& e) {
    norm = std::max(norm, e.max_norm_drift);
    excitation = std::max(excitation, e.max_excitation_drift);
    sources.push_back(name);
  }
  void add(const std::string& name, const StateVector& before, const StateVector& after) {
    norm = std::max(norm, std::abs(after.norm() - before.norm()));
    excitation = std::max(excitation, excitation_drift(before, after));
    sources.push_back(name);
  }
};

Conservation g_conservation;
double g_frame_agreement = -1.0;

Outcome detunings() {
  const double l1 = 0.05;
  const double targets[6] = {0.0, l1, -l1, 2 * l1, 0.0, -2 * l1};
  const double expected[6] = {20.0495, 19.9995, 20.0995, 19.9495, 20.0495, 20.1495};
  Outcome out{true, "delta2 ="};
  for (int i = 0; i < 6; ++i) {
    const double d2 = solve_delta2(targets[i], 0.1, 20.0, 1.0);
    const bool ok = std::abs(std::round(d2 * 1e4) / 1e4 - expected[i]) < 1e-9;
    out.pass = out.pass && ok;
    out.detail += " " + fmt("%.4f", d2) + (ok ? "" : "(!)");
  }
  return out;
}

Outcome reference_fidelities() {
  const double expected[6] = {0.999, 0.995, 0.992, 0.989, 0.987, 0.989};
  const Execution e = execute(make_schedule(4, reference_target()));
  g_conservation.add("reference run", e);
  Outcome out{true, "per-step"};
  for (std::size_t i = 0; i < 6; ++i) {
    const double dev = e.steps[i].fidelity - expected[i];
    const bool ok = std::abs(dev) <= 0.005;
    out.pass = out.pass && ok;
    out.detail += " " + fmt("%.4f", e.steps[i].fidelity) + (ok ? "" : "(off by " + fmt("%+.4f", dev) + ")");
  }
  const bool final_ok = std::abs(e.final_fidelity - 0.989) <= 0.005;
  out.pass = out.pass && final_ok;
  out.detail += "; final " + fmt("%.4f", e.final_fidelity) + (final_ok ? "" : "(!)") + " vs 0.989 +- 0.005";
  return out;
}

Outcome timing() {
  const PhysicalTiming t = physical_units(make_schedule(4, reference_target()), parse_angular_rate("2pi*20kHz"));
  return {t.total_seconds >= 3.5e-3 && t.total_seconds <= 6.5e-3,
          "total " + fmt("%.3f", t.total_seconds * 1e3) + " ms (accepted 3.5-6.5 ms)"};
}

Outcome fock_route() {
  const FockRouteResult r = fock_route_prepare(SymmetricCoefficients::basis(10, 2), ChirpProfile{}, 12);
  // Full-register integration of a smaller superposition exercises the same
  // chirp on the complete qubit + mode space.
  ChirpProfile p;
  const int n = 4;
  CVector mode = CVector::Zero(n + 2);
  for (int k = 0; k <= n; ++k) mode[k] = reference_target()[k];
  const StateVector after = adiabatic_map_register(n, p, mode, n + 2);
  CVector start = CVector::Zero(static_cast<Eigen::Index>(after.dim()));
  start.head(n + 2) = mode;
  g_conservation.add("chirped mapping", StateVector(after.shape(), start), after);
  return {r.fidelity_phase_corrected >= 0.97,
          "D_{10,2} fidelity " + fmt("%.4f", r.fidelity_phase_corrected) + " (raw " + fmt("%.4f", r.fidelity_raw) +
              ", pulse synthesis error " + fmt("%.1e", r.synthesis_error) + ")"};
}

Outcome delta_rule() {
  int checked = 0;
  int violations = 0;
  for (int n = 1; n <= 6; ++n) {
    const int num_qubits = n + 1;
    const RegisterShape shape{num_qubits, 0};
    const AddressingSpec spec = AddressingSpec::prefix(num_qubits, n);
    for (int k = 1; k <= n; ++k) {
      const StateVector src = embedded_dicke(shape, spec.ensemble, k - 1, std::vector<std::pair<int, bool>>{{n + 1, true}});
      const StateVector dst = embedded_dicke(shape, spec.ensemble, k, std::vector<std::pair<int, bool>>{{n + 1, false}});
      for (int delta = -n - 1; delta <= n + 1; ++delta) {
        DerivedParams p;
        p.lambda1 = 1.0;
        p.beta = 0.0;
        p.delta = delta;
        const Eigen::MatrixXcd h(build_effective_rotating(shape, spec, p).matrix);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
        // Both states are eigenvectors; read off their energies and confirm
        // they belong to the diagonalised spectrum.
        long energy[2];
        const StateVector* states[2] = {&src, &dst};
        for (int s = 0; s < 2; ++s) {
          const CVector v = states[s]->amplitudes();
          const double e = (v.dot(h * v)).real();
          const double nearest = (solver.eigenvalues().array() - e).abs().minCoeff();
          if ((h * v - e * v).norm() > 1e-12 || nearest > 1e-12 || std::abs(e - std::round(e)) > 1e-12) ++violations;
          energy[s] = std::lround(e);
        }
        const bool degenerate = energy[0] == energy[1];
        if (degenerate != (delta == 2 * k - n - 1)) ++violations;
        ++checked;
      }
      // At resonance with a weak coupling, the pair splits into (src +- dst)/sqrt2.
      DerivedParams p;
      p.lambda1 = 1.0;
      p.beta = 1e-3;
      p.delta = resonant_delta(n, k, 1.0);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver{
          Eigen::MatrixXcd(build_effective_rotating(shape, spec, p).matrix)};
      const CVector plus = (src.amplitudes() + dst.amplitudes()) / std::sqrt(2.0);
      const double best = (solver.eigenvectors().adjoint() * plus).cwiseAbs2().maxCoeff();
      if (best < 0.999) ++violations;
    }
  }
  ExecuteOptions isolated;
  isolated.samples_per_step = 50;
  isolated.isolated_steps = true;
  const Schedule s = make_schedule(4, reference_target());
  const Execution iso = execute(s, isolated);
  g_conservation.add("isolated steps", iso);
  ExecuteOptions cumulative;
  cumulative.samples_per_step = 50;
  const Execution cum = execute(s, cumulative);
  g_conservation.add("cumulative traces", cum);
  const double endpoint = trace_endpoint_error(iso);
  return {violations == 0 && endpoint < 0.01,
          std::to_string(checked) + " (n,k,delta) cases, " + std::to_string(violations) +
              " violations; trace endpoints off by " + fmt("%.2e", endpoint) + " (cumulative run " +
              fmt("%.3f", trace_endpoint_error(cum)) + ")"};
}

Outcome encoder() {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> size(2, 8);
  double worst_circuit = 1.0;
  double worst_protocol = 1.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    const SymmetricCoefficients c(random_coefficients(rng, n));
    const EncodingCircuit circuit = build_circuit(staircase_decompose(c), n);
    const StateVector encoded = apply_circuit(circuit, StateVector::ground(n));
    worst_circuit = std::min(worst_circuit, oracle::overlap(oracle::staircase(c.values()), encoded.amplitudes()));
    const StateVector done = ideal_intermediate(make_schedule(n, c), static_cast<std::size_t>(n * (n - 1) / 2), encoded);
    worst_protocol = std::min(worst_protocol, oracle::overlap(oracle::symmetric_state(c.values()), done.amplitudes()));
  }
  return {worst_circuit >= 1.0 - 1e-12 && worst_protocol >= 1.0 - 1e-12,
          "min overlap " + fmt("%.15f", worst_circuit) + " (staircase), " + fmt("%.15f", worst_protocol) +
              " (after ideal flops)"};
}

Outcome dispersive() {
  const Schedule s = make_schedule(4, reference_target());
  ExecuteOptions effective;
  effective.samples_per_step = 40;
  const Execution eff = execute(s, effective);
  g_conservation.add("effective sampled", eff);
  ExecuteOptions full = effective;
  full.backend = Backend::kFull;
  full.boson_dim = 5;
  full.dressed_observables = true;
  const Execution dressed = execute(s, full);
  g_conservation.add("full bus", dressed);
  full.dressed_observables = false;
  const Execution bare = execute(s, full);
  full.boson_dim = 7;
  full.dressed_observables = true;
  const Execution larger = execute(s, full);
  g_conservation.add("full bus, 7 levels", larger);
  const double diff = max_trace_difference(eff, dressed);
  return {diff <= 0.02, "max tracked-population difference " + fmt("%.4f", diff) + " (dressed basis; bare " +
                            fmt("%.4f", max_trace_difference(eff, bare)) + "; 7 mode levels " +
                            fmt("%.4f", max_trace_difference(eff, larger)) + "); final fidelity " +
                            fmt("%.4f", eff.final_fidelity) + " vs " + fmt("%.4f", dressed.final_fidelity) +
                            ", max bus population " + fmt("%.1e", dressed.max_bus_population)};
}

Outcome classifier() {
  bool ok = true;
  std::string detail;
  auto expect = [&](const char* name, const SymmetricCoefficients& c, const std::vector<int>& want) {
    const Classification got = classify(c);
    const bool match = got.config.multiplicities == want && !got.config.marginal;
    ok = ok && match;
    detail += std::string(name) + " -> " + got.label + (match ? "" : "(!)") + "; ";
  };
  expect("e_0", SymmetricCoefficients::basis(4, 0), {4});
  expect("D_{4,1}", SymmetricCoefficients::basis(4, 1), {3, 1});
  expect("D_{4,2}", SymmetricCoefficients::basis(4, 2), {2, 2});
  expect("GHZ_4", SymmetricCoefficients::from_real({1, 0, 0, 0, 1}), {1, 1, 1, 1});

  std::mt19937_64 rng(2027);
  double worst_round_trip = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 10;
    const SymmetricCoefficients c(random_coefficients(rng, n));
    const auto back = coefficients_from_roots(majorana_roots(c), n);
    worst_round_trip = std::min(worst_round_trip, oracle::overlap(c.values(), back.values()));
  }
  ok = ok && worst_round_trip >= 1.0 - 1e-8;

  // Degenerate families built from prescribed roots, mapped by random
  // invertible single-qubit operations applied to every qubit.
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(-1.5, 1.5);
  int mapped = 0;
  int changed = 0;
  const std::vector<std::vector<int>> families = {{3, 1}, {2, 2}, {2, 1, 1}, {4, 2}, {3, 2, 1}, {2, 2, 1}, {5}, {1, 1, 1, 1}};
  while (mapped < 100) {
    const auto& family = families[static_cast<std::size_t>(mapped) % families.size()];
    std::vector<Complex> roots;
    for (int m : family) {
      const Complex z(unit(rng), unit(rng));
      roots.insert(roots.end(), static_cast<std::size_t>(m), z);
    }
    const int n = static_cast<int>(roots.size());
    const auto poly = oracle::expand_roots(roots);
    std::vector<Complex> c(poly.size());
    for (std::size_t k = 0; k < poly.size(); ++k) {
      c[k] = poly[k] / std::sqrt(static_cast<double>(oracle::choose(n, static_cast<int>(k))));
    }
    const SymmetricCoefficients state(c);
    Eigen::Matrix2cd a;
    do {
      for (int i = 0; i < 4; ++i) a(i / 2, i % 2) = Complex(gauss(rng), gauss(rng));
    } while (std::abs(a.determinant()) < 0.2);
    // Skip draws whose clusters nearly merge before or after the map.
    const auto before = majorana_roots(state);
    std::vector<ExtendedRoot> after;
    for (const auto& r : before) after.push_back(moebius_image(r, a));
    auto separated = [](const std::vector<ExtendedRoot>& rs) {
      for (std::size_t i = 0; i < rs.size(); ++i) {
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
          const double d = chordal_distance(rs[i], rs[j]);
          if (d > 1e-4 && d < 1e-3) return false;
        }
      }
      return true;
    };
    if (!separated(before) || !separated(after)) continue;
    std::vector<int> want = family;
    std::sort(want.rbegin(), want.rend());
    if (classify(apply_symmetric_operation(state, a)).config.multiplicities != want) ++changed;
    ++mapped;
  }
  ok = ok && changed == 0;
  detail += "round trip min overlap " + fmt("%.12f", worst_round_trip) + "; " + std::to_string(changed) +
            " of 100 symmetric maps changed the class";
  return {ok, detail};
}

Outcome conservation() {
  // Frame equivalence: explicit time-dependent integration against the
  // rotating-frame exponentials.
  const Schedule s = make_schedule(4, reference_target());
  ExecuteOptions rotating;
  rotating.samples_per_step = 40;
  ExecuteOptions lab = rotating;
  lab.frame = Frame::kLab;
  const Execution a = execute(s, rotating);
  const Execution b = execute(s, lab);
  g_conservation.add("effective lab frame", b);
  const double effective_frames = std::max(max_trace_difference(a, b),
                                           (a.final_state.amplitudes() - b.final_state.amplitudes()).norm());
  ExecuteOptions full_static;
  full_static.backend = Backend::kFull;
  full_static.boson_dim = 5;
  full_static.samples_per_step = 20;
  ExecuteOptions full_lab = full_static;
  full_lab.frame = Frame::kLab;
  full_lab.max_dt = 1e-3;
  const Execution c = execute(s, full_static);
  const Execution d = execute(s, full_lab);
  g_conservation.add("full bus lab frame", d);
  const double full_frames = max_trace_difference(c, d);
  g_frame_agreement = std::max(effective_frames, full_frames);
  const bool ok = g_conservation.norm <= 1e-10 && g_conservation.excitation <= 1e-10 && g_frame_agreement <= 1e-8;
  return {ok, "max norm drift " + fmt("%.1e", g_conservation.norm) + ", max excitation drift " +
                  fmt("%.1e", g_conservation.excitation) + " over " + std::to_string(g_conservation.sources.size()) +
                  " integrations; lab vs rotating " + fmt("%.1e", effective_frames) + " (effective), " +
                  fmt("%.1e", full_frames) + " (full bus)"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "reference detunings", 1.0, detunings},
      {2, "reference step fidelities", 60.0, reference_fidelities},
      {3, "timing estimate", 1.0, timing},
      {4, "Fock route benchmark", 300.0, fock_route},
      {5, "delta-rule property", 60.0, delta_rule},
      {6, "encoder exactness", 60.0, encoder},
      {7, "dispersive equivalence", 600.0, dispersive},
      {8, "classifier", 60.0, classifier},
      {9, "conservation suite", 600.0, conservation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = outcome.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s [%d] %s: %s; %.2f s (budget %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : " OVER BUDGET");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
