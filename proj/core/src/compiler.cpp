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

#include "symprep/compiler.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "symprep/encoder.hpp"

namespace symprep {
namespace {

constexpr double kZeroAmplitude = 1e-12;
constexpr double kDriftLimit = 1e-8;

std::string fmt(const char* spec, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Excitation number of the sector whose source component feeds step (n, k).
int source_sector(int num_qubits, int n, int k) { return k + num_qubits - n - 1; }

// arg U_00 - arg U_11 of exp(-i H t) for the 2x2 block of step `own` while
// step `driver` is applied. Only the coupling magnitude enters.
double block_phase(const StepPlan& own, const StepPlan& driver) {
  const int n = own.n;
  const int k = own.k;
  const double lambda1 = driver.params.lambda1;
  Eigen::Matrix2cd h;
  const double w = std::abs(driver.params.beta) * std::sqrt(static_cast<double>(k * (n - k + 1)));
  h << lambda1 * (k - 1) * (n - k + 1) - driver.params.delta, w, w, lambda1 * k * (n - k);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(h);
  const Eigen::Vector2cd phases = (-kI * solver.eigenvalues().cast<Complex>() * driver.duration).array().exp();
  const Eigen::Matrix2cd u = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  return std::arg(u(0, 0)) - std::arg(u(1, 1));
}

// Stark phase still to be released on step `s` once the first `count` steps ran.
double remaining_phase(const Schedule& schedule, std::size_t s, std::size_t count) {
  if (!schedule.options.stark_compensation) return 0.0;
  double phase = 0.0;
  for (std::size_t j = std::max(count, s + 1); j < schedule.steps.size(); ++j) {
    if (schedule.steps[j].n != schedule.steps[s].n) break;
    phase += block_phase(schedule.steps[s], schedule.steps[j]);
  }
  return phase;
}

StateVector lift_like(const StateVector& ideal, const StateVector& psi) {
  if (ideal.shape() == psi.shape()) return ideal;
  if (ideal.boson_dim() == 0 && ideal.num_qubits() == psi.num_qubits()) return ideal.with_boson(psi.boson_dim());
  throw std::invalid_argument("register shapes differ");
}

std::vector<Complex> sector_overlaps(const StateVector& ideal, const StateVector& psi) {
  const StateVector lifted = lift_like(ideal, psi);
  const auto& shape = psi.shape();
  std::vector<Complex> overlaps(static_cast<std::size_t>(shape.num_qubits + shape.boson_dim + 1), 0.0);
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    overlaps[static_cast<std::size_t>(shape.excitations(i))] += std::conj(lifted.amplitude(i)) * psi.amplitude(i);
  }
  return overlaps;
}

double bus_population(const StateVector& psi) {
  double n = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) n += psi.shape().boson_of(i) * std::norm(psi.amplitude(i));
  return n;
}

}  // namespace

DriveConfig StepPlan::drive(const DriveConfig& reference) const {
  DriveConfig cfg = reference;
  cfg.g2 = std::abs(reference.g2) * std::exp(kI * drive_phase);
  cfg.delta2 = delta2;
  return cfg;
}

double Schedule::total_duration() const {
  double t = 0.0;
  for (const auto& s : steps) t += s.duration;
  return t;
}

DriveConfig reference_drive() { return DriveConfig{Complex(1.0, 0.0), Complex(0.1, 0.0), 20.0, 20.0}; }

double flop_angle(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("flop (n, k) requires 1 <= k <= n");
  return std::acos(std::sqrt(binomial(n, k - 1) / binomial(n + 1, k)));
}

double flop_rate(int n, int k, Complex beta) {
  if (n < 1 || k < 1 || k > n) throw std::domain_error("flop (n, k) requires 1 <= k <= n");
  return std::abs(beta) * std::sqrt(static_cast<double>(k) * (n - k + 1));
}

double resonant_delta(int n, int k, double lambda1) { return lambda1 * (2 * k - n - 1); }

Schedule make_schedule(int num_qubits, const SymmetricCoefficients& c, const DriveConfig& reference,
                       const ScheduleOptions& options) {
  if (num_qubits < 2) throw ConfigError("the protocol needs at least two qubits");
  if (c.num_qubits() != num_qubits) {
    throw ConfigError("target has " + std::to_string(c.num_qubits() + 1) + " coefficients, expected " +
                      std::to_string(num_qubits + 1));
  }
  validate(RegisterShape{num_qubits, 0});
  if (reference.delta1 == 0.0 || std::abs(reference.g1) == 0.0 || std::abs(reference.g2) == 0.0) {
    throw ConfigError("g1, g2 and delta1 must be nonzero");
  }
  Schedule schedule{{}, reference, c, options};
  const double g1 = std::abs(reference.g1);
  const double g2 = std::abs(reference.g2);
  const double lambda1 = g1 * g1 / reference.delta1;
  for (int n = 1; n < num_qubits; ++n) {
    for (int k = n; k >= 1; --k) {
      if (options.skip_zero_amplitude && std::abs(c[source_sector(num_qubits, n, k)]) < kZeroAmplitude) continue;
      StepPlan step;
      step.n = n;
      step.k = k;
      for (int q = 1; q <= n; ++q) step.ensemble.push_back(q);
      step.extra = n + 1;
      step.delta_target = resonant_delta(n, k, lambda1);
      step.delta2 = solve_delta2(step.delta_target, g2, reference.delta1, g1);
      DriveConfig real_drive = reference;
      real_drive.g2 = Complex(g2, 0.0);
      real_drive.delta2 = step.delta2;
      step.params = derive_params(real_drive);
      step.theta = flop_angle(n, k);
      step.rabi = flop_rate(n, k, step.params.beta);
      step.duration = step.theta / step.rabi;
      schedule.steps.push_back(std::move(step));
    }
  }
  for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
    StepPlan& step = schedule.steps[i];
    step.pending_phase = remaining_phase(schedule, i, i + 1);
    // The flop's transfer amplitude is -i e^{-i arg beta}; choose arg beta so
    // that it equals e^{i pending}, which later flops of the stage unwind.
    const double wanted = -kPi / 2.0 - step.pending_phase;
    const double natural = std::arg(step.params.beta);
    step.drive_phase = std::remainder(wanted - natural, 2.0 * kPi);
    step.params = derive_params(step.drive(reference));
  }
  return schedule;
}

StateVector ideal_transfer(const StateVector& psi, int n, int k, double phase) {
  const RegisterShape& shape = psi.shape();
  if (n < 1 || n >= shape.num_qubits) throw std::domain_error("flop stage outside register");
  const double a = std::cos(flop_angle(n, k));
  const double b = std::sin(flop_angle(n, k));
  std::uint64_t ens = 0;
  for (int q = 1; q <= n; ++q) ens |= shape.mask(q);
  const std::uint64_t x = shape.mask(n + 1);
  const std::uint64_t rest = (shape.qubit_dim() - 1) & ~(ens | x);
  const double ds = dicke_norm(n, k - 1);
  const double dd = dicke_norm(n, k);
  std::vector<Complex> src(shape.dim(), 0.0);
  std::vector<Complex> dst(shape.dim(), 0.0);
  auto key = [&](std::size_t i) { return shape.index(shape.bits_of(i) & rest, shape.boson_of(i)); };
  auto kind = [&](std::size_t i) {
    const std::uint64_t bits = shape.bits_of(i);
    const int w = std::popcount(bits & ens);
    if ((bits & x) != 0 && w == k - 1) return 1;
    if ((bits & x) == 0 && w == k) return 2;
    return 0;
  };
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    const int t = kind(i);
    if (t == 1) src[key(i)] += psi.amplitude(i) / ds;
    if (t == 2) dst[key(i)] += psi.amplitude(i) / dd;
  }
  const Complex e = std::exp(kI * phase);
  CVector out = psi.amplitudes();
  for (std::size_t i = 0; i < shape.dim(); ++i) {
    const int t = kind(i);
    if (t == 0) continue;
    const Complex as = src[key(i)];
    const Complex ad = dst[key(i)];
    if (t == 1) out[static_cast<Eigen::Index>(i)] += (a * as - b * std::conj(e) * ad - as) / ds;
    if (t == 2) out[static_cast<Eigen::Index>(i)] += (b * e * as + a * ad - ad) / dd;
  }
  return StateVector(shape, std::move(out));
}

StateVector ideal_intermediate(const Schedule& schedule, std::size_t count, const StateVector& initial) {
  if (count > schedule.steps.size()) throw std::out_of_range("more steps requested than scheduled");
  StateVector psi = initial;
  for (std::size_t s = 0; s < count; ++s) {
    const StepPlan& step = schedule.steps[s];
    psi = ideal_transfer(psi, step.n, step.k, remaining_phase(schedule, s, count));
  }
  return psi;
}

StateVector ideal_protocol(const Schedule& schedule) {
  return ideal_intermediate(schedule, schedule.steps.size(), staircase_superposition(schedule.target));
}

double sector_compensated_fidelity(const StateVector& ideal, const StateVector& psi) {
  double total = 0.0;
  for (const Complex& o : sector_overlaps(ideal, psi)) total += std::abs(o);
  return total * total;
}

std::vector<double> sector_phases(const StateVector& ideal, const StateVector& psi) {
  std::vector<double> out;
  for (const Complex& o : sector_overlaps(ideal, psi)) out.push_back(std::abs(o) > 0.0 ? std::arg(o) : 0.0);
  return out;
}

std::vector<std::string> trace_columns(const StepPlan& step) {
  const std::string n = std::to_string(step.n);
  const std::string k = std::to_string(step.k);
  return {"D" + std::to_string(step.n + 1) + "_" + k, "D" + n + "_" + std::to_string(step.k - 1) + "_e",
          "D" + n + "_" + k + "_g"};
}

std::vector<Observable> tracked_states(const StepPlan& step, int num_qubits) {
  const RegisterShape shape{num_qubits, 0};
  std::vector<std::pair<int, bool>> fixed_src{{step.extra, true}};
  std::vector<std::pair<int, bool>> fixed_dst{{step.extra, false}};
  for (int q = step.extra + 1; q <= num_qubits; ++q) {
    fixed_src.emplace_back(q, true);
    fixed_dst.emplace_back(q, true);
  }
  const StateVector src = embedded_dicke(shape, step.ensemble, step.k - 1, fixed_src);
  const StateVector dst = embedded_dicke(shape, step.ensemble, step.k, fixed_dst);
  const CVector merged = std::cos(step.theta) * src.amplitudes() +
                         std::sin(step.theta) * std::exp(kI * step.pending_phase) * dst.amplitudes();
  const auto names = trace_columns(step);
  return {Observable{names[0], StateVector(shape, merged)}, Observable{names[1], src}, Observable{names[2], dst}};
}

namespace {

Execution run_schedule(const Schedule& schedule, const ExecuteOptions& options, const StateVector& initial) {
  const int num_qubits = schedule.target.num_qubits();
  const bool full = options.backend == Backend::kFull;
  if (full && options.boson_dim < 2) throw ConfigError("the full backend needs a mode truncation of at least 2");
  if (options.frame == Frame::kLab && !(options.max_dt > 0.0)) throw ConfigError("integration step must be positive");
  const RegisterShape shape{num_qubits, full ? options.boson_dim : 0};

  Execution result{initial, initial, {}, 0.0, 0.0, {}, 0.0, 0.0, 0.0, 0.0, 0.0};
  StateVector psi = full ? initial.with_boson(options.boson_dim) : initial;
  const std::vector<double> weights = sector_weights(initial);
  const StateVector ground = StateVector::basis(RegisterShape{num_qubits, 0}, 0);
  const StateVector top = StateVector::basis(RegisterShape{num_qubits, 0}, (std::uint64_t{1} << num_qubits) - 1);
  const double ground0 = population(ground, psi);
  const double top0 = population(top, psi);

  double clock = 0.0;
  for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
    const StepPlan& step = schedule.steps[i];
    const AddressingSpec spec = AddressingSpec::prefix(num_qubits, step.n);
    const DriveConfig drive = step.drive(schedule.reference);
    StepRecord record;
    record.plan = step;
    record.start_time = clock;
    if (options.isolated_steps) {
      const StateVector intended = ideal_intermediate(schedule, i, initial);
      psi = full ? intended.with_boson(options.boson_dim) : intended;
    }
    const StateVector before = psi;

    const double weight = weights[static_cast<std::size_t>(source_sector(num_qubits, step.n, step.k))];
    const std::vector<Observable> observables =
        options.samples_per_step > 0 ? tracked_states(step, num_qubits) : std::vector<Observable>{};
    auto observe = [&](double t, const StateVector& state) {
      if (options.samples_per_step <= 0) return;
      if (full && options.dressed_observables) {
        record.trace.record(t, undress(state, spec, drive), observables);
      } else {
        record.trace.record(t, state, observables);
      }
      if (weight > 0.0) {
        for (double& v : record.trace.rows.back()) v /= weight;
      }
      if (full) record.max_bus_population = std::max(record.max_bus_population, bus_population(state));
    };

    if (options.frame == Frame::kRotating) {
      const Hamiltonian h = full ? build_full_bus_static(shape, spec, drive)
                                 : build_effective_rotating(shape, spec, step.params);
      const Propagator propagator(h);
      if (options.samples_per_step > 0) {
        const double dt = step.duration / options.samples_per_step;
        for (int s = 0; s <= options.samples_per_step; ++s) observe(dt * s, propagator.evolve(before, dt * s));
      }
      psi = propagator.evolve(before, step.duration);
    } else {
      const DrivenHamiltonian h =
          full ? build_full_bus(shape, spec, drive) : build_effective_lab(shape, spec, step.params);
      // Re-align to the time-independent frame of the same step.
      const SparseOperator generator = full ? full_bus_frame_generator(shape, spec, drive)
                                            : SparseOperator(-step.params.delta * excitation_number(shape, {spec.extra}));
      auto realign = [&](double t, const StateVector& state) { return apply_diagonal_phase(generator, -t, state); };
      const int samples = std::max(options.samples_per_step, 1);
      const double sample_dt = step.duration / samples;
      const auto substeps = static_cast<int>(std::ceil(sample_dt / options.max_dt));
      const double dt = sample_dt / substeps;
      observe(0.0, before);
      StateVector current = before;
      for (int s = 1; s <= samples; ++s) {
        current = propagate(h, current, sample_dt * (s - 1), sample_dt * s, dt);
        observe(sample_dt * s, realign(sample_dt * s, current));
      }
      psi = realign(step.duration, current);
    }
    clock += step.duration;

    record.norm_drift = std::abs(psi.norm() - before.norm());
    record.excitation_drift = excitation_drift(before, psi);
    if (full) record.max_bus_population = std::max(record.max_bus_population, bus_population(psi));
    const StateVector ideal = ideal_intermediate(schedule, i + 1, initial);
    record.fidelity = sector_compensated_fidelity(ideal, psi);
    record.raw_fidelity = std::norm(inner_product(lift_like(ideal, psi), psi));
    result.max_norm_drift = std::max(result.max_norm_drift, record.norm_drift);
    result.max_excitation_drift = std::max(result.max_excitation_drift, record.excitation_drift);
    result.max_bus_population = std::max(result.max_bus_population, record.max_bus_population);
    result.steps.push_back(std::move(record));
  }
  if (result.max_norm_drift > kDriftLimit || result.max_excitation_drift > kDriftLimit) {
    throw NumericalError("propagation violated norm or excitation conservation (norm drift " +
                         fmt("%.3g", result.max_norm_drift) + ", excitation drift " +
                         fmt("%.3g", result.max_excitation_drift) + ")");
  }
  const StateVector target = assemble_symmetric(schedule.target);
  result.final_state = psi;
  result.total_time = clock;
  result.final_fidelity = sector_compensated_fidelity(target, psi);
  result.final_raw_fidelity = std::norm(inner_product(lift_like(target, psi), psi));
  result.final_sector_phases = sector_phases(target, psi);
  result.endpoint_drift =
      std::max(std::abs(population(ground, psi) - ground0), std::abs(population(top, psi) - top0));
  return result;
}

}  // namespace

Execution execute(const Schedule& schedule, const ExecuteOptions& options) {
  const StateVector initial = staircase_superposition(schedule.target);
  if (!options.encoder_precompensation) return run_schedule(schedule, options, initial);
  ExecuteOptions calibration = options;
  calibration.samples_per_step = 0;
  const Execution first = run_schedule(schedule, calibration, initial);
  std::vector<Complex> rotated = schedule.target.values();
  for (std::size_t k = 0; k < rotated.size(); ++k) {
    // Qubit excitation k is the sector carrying c_k (the mode starts empty).
    rotated[k] *= std::exp(-kI * first.final_sector_phases[k]);
  }
  return run_schedule(schedule, options, staircase_superposition(SymmetricCoefficients(rotated)));
}

double trace_endpoint_error(const Execution& execution) {
  double worst = 0.0;
  for (const auto& rec : execution.steps) {
    if (rec.trace.empty()) continue;
    const auto& last = rec.trace.rows.back();
    const double c2 = std::pow(std::cos(rec.plan.theta), 2);
    worst = std::max({worst, std::abs(last[0] - 1.0), std::abs(last[1] - c2), std::abs(last[2] - (1.0 - c2))});
  }
  return worst;
}

double max_trace_difference(const Execution& a, const Execution& b) {
  if (a.steps.size() != b.steps.size()) throw ConfigError("executions cover different schedules");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    const Trajectory& ta = a.steps[i].trace;
    const Trajectory& tb = b.steps[i].trace;
    if (ta.rows.size() != tb.rows.size() || ta.columns != tb.columns) {
      throw ConfigError("executions were sampled differently");
    }
    for (std::size_t r = 0; r < ta.rows.size(); ++r) {
      for (std::size_t c = 0; c < ta.rows[r].size(); ++c) {
        worst = std::max(worst, std::abs(ta.rows[r][c] - tb.rows[r][c]));
      }
    }
  }
  return worst;
}

PhysicalTiming physical_units(const Schedule& schedule, double g1_angular) {
  PhysicalTiming out;
  for (const auto& s : schedule.steps) {
    out.step_seconds.push_back(to_seconds(s.duration, g1_angular));
    out.total_seconds += out.step_seconds.back();
  }
  if (schedule.steps.empty()) to_seconds(0.0, g1_angular);  // still validate the rate
  return out;
}

double parse_angular_rate(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::tolower(ch)));
  }
  if (s.empty()) throw ConfigError("empty rate");
  double factor = 1.0;
  bool explicit_two_pi = false;
  for (const char* prefix : {"2pi*", "2*pi*", "2pix", "2pi"}) {
    const std::string p(prefix);
    if (s.rfind(p, 0) == 0) {
      s = s.substr(p.size());
      explicit_two_pi = true;
      break;
    }
  }
  struct Unit {
    const char* suffix;
    double scale;
    bool cyclic;
  };
  static constexpr Unit kUnits[] = {{"krad/s", 1e3, false}, {"rad/s", 1.0, false},
                                    {"mhz", 1e6, true},     {"khz", 1e3, true},     {"hz", 1.0, true}};
  bool cyclic = false;
  bool has_unit = false;
  for (const Unit& u : kUnits) {
    const std::string suffix(u.suffix);
    if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
      s.resize(s.size() - suffix.size());
      factor = u.scale;
      cyclic = u.cyclic;
      has_unit = true;
      break;
    }
  }
  if (explicit_two_pi && !has_unit && s.find_first_not_of("0123456789.e+-") == std::string::npos) {
    cyclic = true;  // "2pi*20000": a bare cyclic frequency
  }
  if (explicit_two_pi && !cyclic) throw ConfigError("2pi factor only applies to cyclic frequencies: " + text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse rate '" + text + "'");
  }
  if (used != s.size()) throw ConfigError("cannot parse rate '" + text + "'");
  const double rate = value * factor * (cyclic ? 2.0 * kPi : 1.0);
  if (!(rate > 0.0) || !std::isfinite(rate)) throw ConfigError("rate must be positive: " + text);
  return rate;
}

namespace {

struct TableRow {
  std::string step, delta, g2, delta2, delta1, fidelity;
};

std::vector<TableRow> table_rows(const Execution& execution, const Schedule& schedule) {
  std::vector<TableRow> rows;
  for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
    const StepPlan& s = schedule.steps[i];
    const long ratio = std::lround(s.delta_target / s.params.lambda1);
    const double fidelity = i < execution.steps.size() ? execution.steps[i].fidelity : std::nan("");
    rows.push_back(TableRow{std::to_string(i + 1), std::to_string(ratio), fmt("%.4g", std::abs(schedule.reference.g2)),
                            fmt("%.4f", s.delta2), fmt("%.4g", schedule.reference.delta1), fmt("%.4f", fidelity)});
  }
  return rows;
}

}  // namespace

std::string table2_text(const Execution& execution, const Schedule& schedule) {
  std::ostringstream out;
  out << "# rates in units of g1\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-5s %-10s %-6s %-10s %-8s %-8s\n", "step", "delta/l1", "g2", "delta2", "delta1",
                "fidelity");
  out << line;
  for (const auto& r : table_rows(execution, schedule)) {
    std::snprintf(line, sizeof line, "%-5s %-10s %-6s %-10s %-8s %-8s\n", r.step.c_str(), r.delta.c_str(),
                  r.g2.c_str(), r.delta2.c_str(), r.delta1.c_str(), r.fidelity.c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "final fidelity %.4f (raw %.4f), total time %.2f / g1\n",
                execution.final_fidelity, execution.final_raw_fidelity, execution.total_time);
  out << line;
  return out.str();
}

std::string table2_csv(const Execution& execution, const Schedule& schedule) {
  std::ostringstream out;
  out << "# rates in units of g1\n";
  out << "step,delta_over_lambda1,g2,delta2,delta1,fidelity\n";
  for (const auto& r : table_rows(execution, schedule)) {
    out << r.step << ',' << r.delta << ',' << r.g2 << ',' << r.delta2 << ',' << r.delta1 << ',' << r.fidelity << '\n';
  }
  return out.str();
}

}  // namespace symprep
