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

// Subcommands of the symprep tool. Each returns the process exit code and may
// throw ConfigError (exit 2) or NumericalError (exit 3); run_guarded maps the
// exceptions onto the exit-code contract.

#include <functional>
#include <ostream>

#include "run_config.hpp"

namespace symprep::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalError = 3;

/// Staircase encoding circuit of the target plus its verification residual.
int cmd_encode(const RunConfig& config, std::ostream& out);

/// Schedule compilation and simulation with per-step fidelities and traces.
int cmd_prepare(const RunConfig& config, std::ostream& out);

/// Fock-state route: pulse synthesis and adiabatic mapping.
int cmd_fock_route(const RunConfig& config, std::ostream& out);

/// Degeneracy class of the target.
int cmd_classify(const RunConfig& config, std::ostream& out);

/// Runs `command`, reporting errors on `err` and translating them to exit codes.
int run_guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace symprep::cli
