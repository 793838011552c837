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

#include "symprep/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace symprep {
namespace {

using nlohmann::json;

json complex_pair(Complex z) { return json::array({round12(z.real()), round12(z.imag())}); }

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json state_to_json(const StateVector& psi) {
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    re.push_back(round12(psi.amplitude(i).real()));
    im.push_back(round12(psi.amplitude(i).imag()));
  }
  return json{{"n_qubits", psi.num_qubits()}, {"boson_dim", psi.boson_dim()}, {"re", re}, {"im", im}};
}

StateVector state_from_json(const json& j) {
  try {
    const RegisterShape shape{j.at("n_qubits").get<int>(), j.at("boson_dim").get<int>()};
    validate(shape);
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != shape.dim() || im.size() != shape.dim()) throw ConfigError("amplitude list has wrong length");
    CVector amps(static_cast<Eigen::Index>(shape.dim()));
    for (std::size_t i = 0; i < shape.dim(); ++i) amps[static_cast<Eigen::Index>(i)] = Complex(re[i], im[i]);
    return StateVector(shape, std::move(amps));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed state: ") + e.what());
  }
}

json circuit_to_json(const EncodingCircuit& circuit) {
  json out = json::array();
  for (const auto& g : circuit.gates) {
    out.push_back(json{{"kind", g.control ? "crot" : "rot"},
                       {"control", g.control ? json(*g.control) : json(nullptr)},
                       {"target", g.target},
                       {"alpha", complex_pair(g.rotation.alpha)},
                       {"beta", complex_pair(g.rotation.beta)}});
  }
  return out;
}

json step_to_json(const StepPlan& s) {
  return json{{"n", s.n},
              {"k", s.k},
              {"ensemble", s.ensemble},
              {"extra", s.extra},
              {"delta_target", round12(s.delta_target)},
              {"delta_target_over_lambda1", round12(s.delta_target / s.params.lambda1)},
              {"delta2", round12(s.delta2)},
              {"theta", round12(s.theta)},
              {"rabi", round12(s.rabi)},
              {"duration", round12(s.duration)},
              {"drive_phase", round12(s.drive_phase)},
              {"pending_phase", round12(s.pending_phase)},
              {"lambda1", round12(s.params.lambda1)},
              {"lambda2", round12(s.params.lambda2)},
              {"beta", complex_pair(s.params.beta)},
              {"delta", round12(s.params.delta)}};
}

json schedule_to_json(const Schedule& schedule) {
  json out = json::array();
  for (const auto& s : schedule.steps) out.push_back(step_to_json(s));
  return out;
}

json pulses_to_json(const PulseSequence& pulses) {
  json out = json::array();
  for (const auto& p : pulses.pulses) {
    out.push_back(json{{"kind", p.kind == PulseKind::kCarrier ? "carrier" : "sideband"},
                       {"theta", round12(p.theta)},
                       {"phi", round12(p.phi)}});
  }
  return out;
}

json chirp_to_json(const ChirpProfile& p) {
  return json{{"peak_rate", round12(p.peak_rate)},
              {"sweep_factor", round12(p.sweep_factor)},
              {"duration", round12(p.duration)},
              {"time_step", round12(p.time_step)},
              {"adiabaticity_threshold", round12(p.adiabaticity_threshold)}};
}

ChirpProfile chirp_from_json(const json& j, ChirpProfile p) {
  if (!j.is_object()) throw ConfigError("chirp profile must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "peak_rate") {
        p.peak_rate = value.get<double>();
      } else if (key == "sweep_factor") {
        p.sweep_factor = value.get<double>();
      } else if (key == "duration") {
        p.duration = value.get<double>();
      } else if (key == "time_step") {
        p.time_step = value.get<double>();
      } else if (key == "adiabaticity_threshold") {
        p.adiabaticity_threshold = value.get<double>();
      } else {
        throw ConfigError("unknown chirp key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed chirp profile: ") + e.what());
  }
  return p;
}

json classification_to_json(const Classification& c) {
  json roots = json::array();
  for (const auto& r : c.roots) {
    roots.push_back(json{{"re", r.at_infinity ? json(nullptr) : json(round12(r.value.real()))},
                         {"im", r.at_infinity ? json(nullptr) : json(round12(r.value.imag()))},
                         {"at_infinity", r.at_infinity}});
  }
  return json{{"config", c.config.multiplicities}, {"label", c.label}, {"roots", roots}, {"marginal", c.config.marginal}};
}

json execution_to_json(const Execution& e) {
  json steps = json::array();
  for (const auto& r : e.steps) {
    steps.push_back(json{{"n", r.plan.n},
                         {"k", r.plan.k},
                         {"start_time", round12(r.start_time)},
                         {"duration", round12(r.plan.duration)},
                         {"fidelity", round12(r.fidelity)},
                         {"raw_fidelity", round12(r.raw_fidelity)},
                         {"norm_drift", round12(r.norm_drift)},
                         {"excitation_drift", round12(r.excitation_drift)},
                         {"max_bus_population", round12(r.max_bus_population)}});
  }
  json phases = json::array();
  for (double p : e.final_sector_phases) phases.push_back(round12(p));
  return json{{"steps", steps},
              {"final_fidelity", round12(e.final_fidelity)},
              {"final_raw_fidelity", round12(e.final_raw_fidelity)},
              {"final_sector_phases", phases},
              {"total_time", round12(e.total_time)},
              {"max_norm_drift", round12(e.max_norm_drift)},
              {"max_excitation_drift", round12(e.max_excitation_drift)},
              {"max_bus_population", round12(e.max_bus_population)},
              {"endpoint_drift", round12(e.endpoint_drift)}};
}

}  // namespace symprep
