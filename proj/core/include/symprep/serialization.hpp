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

// JSON forms of the library's values. Floating-point values written by these
// functions are rounded to 12 significant digits so reports are stable.

#include <nlohmann/json.hpp>

#include "symprep/classifier.hpp"
#include "symprep/compiler.hpp"
#include "symprep/encoder.hpp"
#include "symprep/fock_route.hpp"
#include "symprep/symmetric.hpp"

namespace symprep {

/// Rounds to 12 significant digits.
double round12(double v);

/// {"n_qubits", "boson_dim", "re": [...], "im": [...]} in register order.
nlohmann::json state_to_json(const StateVector& psi);
/// Throws ConfigError on malformed input.
StateVector state_from_json(const nlohmann::json& j);

/// List of {"kind": "rot"|"crot", "control": int|null, "target", "alpha": [re,im], "beta": [re,im]}.
nlohmann::json circuit_to_json(const EncodingCircuit& circuit);

nlohmann::json step_to_json(const StepPlan& step);
/// List of step records in protocol units.
nlohmann::json schedule_to_json(const Schedule& schedule);

/// List of {"kind": "carrier"|"sideband", "theta", "phi"}.
nlohmann::json pulses_to_json(const PulseSequence& pulses);

nlohmann::json chirp_to_json(const ChirpProfile& profile);
/// Missing keys keep their defaults; throws ConfigError on wrong types.
ChirpProfile chirp_from_json(const nlohmann::json& j, ChirpProfile defaults = {});

/// {"config": [...], "label", "roots": [{"re", "im", "at_infinity"}], "marginal"}.
nlohmann::json classification_to_json(const Classification& classification);

/// Per-step and final figures of an execution.
nlohmann::json execution_to_json(const Execution& execution);

}  // namespace symprep
