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

// Run configuration of the symprep command-line tool: a single JSON document
// whose fields can be overridden by flags, plus target-coefficient parsing.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symprep/common.hpp"
#include "symprep/fock_route.hpp"
#include "symprep/symmetric.hpp"

namespace symprep::cli {

/// Inline coefficients must already be normalised to this accuracy unless
/// renormalisation is requested explicitly.
inline constexpr double kNormalizationTolerance = 1e-6;

struct RunConfig {
  std::string target;       // inline list or named state (ghz, w, dicke:K, ground, excited)
  std::string target_file;  // coefficients file (JSON or plain list)
  int num_qubits = 0;       // 0: inferred from the coefficients
  bool normalize = false;

  std::string backend = "effective";  // effective | full
  double g1 = 1.0;
  double g2 = 0.1;
  double delta1 = 20.0;
  int truncation = 0;  // boson levels of the full backend / Fock route (0: default)
  int samples_per_step = 50;
  bool skip_zero = false;
  bool stark_compensation = true;
  bool precompensate = false;
  bool reference_table2 = false;
  std::string physical_g1;  // e.g. "2pi*20kHz"

  ChirpProfile chirp;
  std::vector<double> sweep_durations;  // Fock route duration grid

  double rel_tol = 1e-6;  // classifier clustering threshold

  std::filesystem::path out_dir;  // empty: no files written
};

/// Merges a JSON configuration document into `config`. Unknown keys and
/// wrongly typed values throw ConfigError.
void apply_config_json(const nlohmann::json& j, RunConfig& config);

/// Reads and merges a configuration file.
void load_config_file(const std::filesystem::path& path, RunConfig& config);

/// Parses "1,2,3", "[1, 2, 3]", "0.5+0.5i, 0.5-0.5i" or a JSON array whose
/// entries are numbers, [re, im] pairs or {"re":..,"im":..} objects.
std::vector<Complex> parse_coefficient_list(const std::string& text);

/// Reads coefficients from a file holding a JSON array, an object with a
/// "coefficients" array, or a plain separated list.
std::vector<Complex> read_coefficient_file(const std::filesystem::path& path);

/// Coefficients of a named symmetric state on `num_qubits` qubits.
std::optional<SymmetricCoefficients> named_target(const std::string& name, int num_qubits);

/// Resolves the configured target, enforcing the normalisation rule and the
/// qubit count.
SymmetricCoefficients resolve_target(const RunConfig& config);

}  // namespace symprep::cli
