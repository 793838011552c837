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


#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symprep/classifier.hpp"
#include "symprep/compiler.hpp"
#include "symprep/encoder.hpp"
#include "symprep/fock_route.hpp"
#include "symprep/serialization.hpp"

namespace symprep::cli {
namespace {

using nlohmann::json;

constexpr const char* kUnits = "rates in units of g1, time in units of 1/g1";
constexpr int kDefaultFullTruncation = 5;

std::string format(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + path.string());
  file << content;
  if (!file) throw ConfigError("failed writing " + path.string());
}

void write_json(const RunConfig& config, const std::string& name, const json& j) {
  if (config.out_dir.empty()) return;
  write_file(config.out_dir / name, j.dump(2) + "\n");
}

json coefficients_json(const SymmetricCoefficients& c) {
  json out = json::array();
  for (const Complex& z : c.values()) out.push_back(json::array({round12(z.real()), round12(z.imag())}));
  return out;
}

std::string step_file(const std::string& dir, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "step_%02zu.csv", index + 1);
  return dir + "/" + buf;
}

void write_traces(const RunConfig& config, const std::string& dir, const Execution& e) {
  if (config.out_dir.empty()) return;
  for (std::size_t i = 0; i < e.steps.size(); ++i) {
    write_file(config.out_dir / step_file(dir, i), trajectory_csv(e.steps[i].trace));
  }
}

Backend parse_backend(const std::string& name) {
  if (name == "effective") return Backend::kEffective;
  if (name == "full") return Backend::kFull;
  throw ConfigError("unknown backend '" + name + "' (expected effective or full)");
}

SymmetricCoefficients table2_target() { return SymmetricCoefficients::from_real({1.0, 2.0, 3.0, 4.0, 5.0}); }

}  // namespace

int cmd_encode(const RunConfig& config, std::ostream& out) {
  const SymmetricCoefficients c = resolve_target(config);
  const EncodingCircuit circuit = build_circuit(staircase_decompose(c), c.num_qubits());
  const StateVector prepared = apply_circuit(circuit, StateVector::ground(c.num_qubits()));
  const StateVector expected = staircase_superposition(c);
  const double residual = (prepared.amplitudes() - expected.amplitudes()).norm();
  int active = 0;
  for (const Gate& g : circuit.gates) active += g.rotation.is_identity() ? 0 : 1;

  const json report{{"n_qubits", c.num_qubits()},
                    {"coefficients", coefficients_json(c)},
                    {"circuit", circuit_to_json(circuit)},
                    {"active_gates", active},
                    {"residual", round12(residual)},
                    {"overlap_defect", round12(1.0 - fidelity(expected, prepared))}};
  write_json(config, "circuit.json", report);
  out << report.dump(2) << "\n";
  return kExitSuccess;
}

int cmd_prepare(const RunConfig& config, std::ostream& out) {
  if (config.reference_table2 && (!config.target.empty() || !config.target_file.empty())) {
    throw ConfigError("--reference-table2 fixes the target; do not pass --target as well");
  }
  const SymmetricCoefficients c = config.reference_table2 ? table2_target() : resolve_target(config);
  const Backend backend = parse_backend(config.backend);
  if (config.samples_per_step < 0) throw ConfigError("samples per step must be non-negative");
  if (backend == Backend::kFull && config.truncation == 1) {
    throw ConfigError("the full backend needs a mode truncation of at least 2");
  }

  const DriveConfig reference{Complex(config.g1, 0.0), Complex(config.g2, 0.0), config.delta1, config.delta1};
  for (const auto& w : dispersive_warnings(reference)) out << "warning: " << w << "\n";
  ScheduleOptions schedule_options;
  schedule_options.skip_zero_amplitude = config.skip_zero;
  schedule_options.stark_compensation = config.stark_compensation;
  const Schedule schedule = make_schedule(c.num_qubits(), c, reference, schedule_options);

  ExecuteOptions options;
  options.samples_per_step = config.samples_per_step;
  options.encoder_precompensation = config.precompensate;
  const Execution effective = execute(schedule, options);
  out << table2_text(effective, schedule);

  json result{{"units", kUnits},
              {"n_qubits", c.num_qubits()},
              {"coefficients", coefficients_json(c)},
              {"effective", execution_to_json(effective)}};

  if (backend == Backend::kFull) {
    ExecuteOptions full_options = options;
    full_options.backend = Backend::kFull;
    full_options.boson_dim = config.truncation > 0 ? config.truncation : kDefaultFullTruncation;
    full_options.dressed_observables = true;
    const Execution full = execute(schedule, full_options);
    full_options.dressed_observables = false;
    const Execution bare = execute(schedule, full_options);
    const double dressed_diff = config.samples_per_step > 0 ? max_trace_difference(effective, full) : 0.0;
    const double bare_diff = config.samples_per_step > 0 ? max_trace_difference(effective, bare) : 0.0;

    out << "backend comparison (mode truncation " << full_options.boson_dim << ")\n";
    out << "step  effective  full\n";
    for (std::size_t i = 0; i < effective.steps.size(); ++i) {
      char line[96];
      std::snprintf(line, sizeof line, "%-5zu %-10.4f %-10.4f\n", i + 1, effective.steps[i].fidelity,
                    full.steps[i].fidelity);
      out << line;
    }
    out << "final " << format("%.4f", effective.final_fidelity) << " vs " << format("%.4f", full.final_fidelity)
        << "\nmax tracked-population difference " << format("%.4g", dressed_diff) << " (dressed), "
        << format("%.4g", bare_diff) << " (bare)\n";

    result["full"] = execution_to_json(full);
    result["full"]["boson_dim"] = full_options.boson_dim;
    result["comparison"] = json{{"max_population_difference_dressed", round12(dressed_diff)},
                                {"max_population_difference_bare", round12(bare_diff)}};
    write_traces(config, "traces_full", full);
  }

  if (!config.physical_g1.empty()) {
    const double g1 = parse_angular_rate(config.physical_g1);
    const PhysicalTiming timing = physical_units(schedule, g1);
    out << "total time " << format("%.4f", timing.total_seconds * 1e3) << " ms at g1 = " << format("%.6g", g1)
        << " rad/s\n";
    json steps = json::array();
    for (double s : timing.step_seconds) steps.push_back(round12(s));
    result["physical"] = json{{"g1_rad_per_s", round12(g1)},
                              {"total_seconds", round12(timing.total_seconds)},
                              {"step_seconds", steps}};
  }

  json schedule_doc{{"units", kUnits},
                    {"n_qubits", c.num_qubits()},
                    {"reference", json{{"g1", round12(config.g1)},
                                       {"g2", round12(config.g2)},
                                       {"delta1", round12(config.delta1)}}},
                    {"total_duration", round12(schedule.total_duration())},
                    {"steps", schedule_to_json(schedule)}};
  write_json(config, "schedule.json", schedule_doc);
  write_json(config, "result.json", result);
  if (!config.out_dir.empty()) write_file(config.out_dir / "table2.csv", table2_csv(effective, schedule));
  write_traces(config, "traces", effective);
  return kExitSuccess;
}

int cmd_fock_route(const RunConfig& config, std::ostream& out) {
  const SymmetricCoefficients c = resolve_target(config);
  const int n = c.num_qubits();
  validate(config.chirp, n);
  const FockRouteResult result = fock_route_prepare(c, config.chirp, config.truncation);

  json sweep = json::array();
  bool monotone = true;
  double previous = -1.0;
  for (double duration : config.sweep_durations) {
    ChirpProfile profile = config.chirp;
    profile.duration = duration;
    validate(profile, n);
    const FockRouteResult r = fock_route_prepare(c, profile, config.truncation);
    if (r.fidelity_phase_corrected + 1e-9 < previous) monotone = false;
    previous = r.fidelity_phase_corrected;
    sweep.push_back(json{{"duration", round12(duration)},
                         {"adiabaticity_metric", round12(adiabaticity_metric(profile, n))},
                         {"fidelity_raw", round12(r.fidelity_raw)},
                         {"fidelity_phase_corrected", round12(r.fidelity_phase_corrected)}});
  }

  json report{{"units", kUnits},
              {"n_qubits", n},
              {"truncation", config.truncation > 0 ? config.truncation : n + 2},
              {"chirp", chirp_to_json(config.chirp)},
              {"adiabaticity_metric", round12(adiabaticity_metric(config.chirp, n))},
              {"pulses", pulses_to_json(result.pulses)},
              {"synthesis_error", round12(result.synthesis_error)},
              {"fidelity_raw", round12(result.fidelity_raw)},
              {"fidelity_phase_corrected", round12(result.fidelity_phase_corrected)}};
  if (!config.sweep_durations.empty()) {
    report["sweep"] = sweep;
    report["sweep_monotone"] = monotone;
  }
  write_json(config, "fock_route.json", report);
  out << report.dump(2) << "\n";
  return kExitSuccess;
}

int cmd_classify(const RunConfig& config, std::ostream& out) {
  const SymmetricCoefficients c = resolve_target(config);
  if (!(config.rel_tol > 0.0)) throw ConfigError("clustering tolerance must be positive");
  ClusterOptions options;
  options.rel_tol = config.rel_tol;
  const json report = classification_to_json(classify(c, options));
  write_json(config, "classification.json", report);
  out << report.dump(2) << "\n";
  return kExitSuccess;
}

int run_guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const std::logic_error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace symprep::cli
