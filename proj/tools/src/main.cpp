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


// symprep: compile, simulate and classify symmetric multi-qubit states.
//
//   symprep encode     --target 1,2,3,4,5 --normalize
//   symprep prepare    --reference-table2 --physical-g1 2pi*20kHz --out-dir run
//   symprep fock-route --target dicke:2 --n 10 --truncation 12
//   symprep classify   --target w --n 4

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "run_config.hpp"

namespace {

using symprep::cli::RunConfig;

// Flag values; unset flags leave the configuration file untouched.
struct Overrides {
  std::string config_file;
  std::optional<std::string> target;
  std::optional<std::string> target_file;
  std::optional<int> n;
  bool normalize = false;
  std::optional<std::string> backend;
  std::optional<double> g1;
  std::optional<double> g2;
  std::optional<double> delta1;
  std::optional<int> truncation;
  std::optional<int> samples;
  bool skip_zero = false;
  bool no_stark_compensation = false;
  bool precompensate = false;
  bool reference_table2 = false;
  std::optional<std::string> physical_g1;
  std::optional<double> duration;
  std::optional<double> time_step;
  std::vector<double> sweep;
  std::optional<double> rel_tol;
  std::optional<std::string> out_dir;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_file, "JSON configuration document (flags override its fields)");
  cmd->add_option("--target", o.target, "Coefficients (\"1,2,3\", JSON array, a+bi) or ghz | w | dicke:K | ground");
  cmd->add_option("--target-file", o.target_file, "File holding the coefficients");
  cmd->add_option("--n", o.n, "Qubit count (required for named targets)")->check(CLI::PositiveNumber);
  cmd->add_flag("--normalize", o.normalize, "Rescale coefficients that are not normalised");
  cmd->add_option("--out-dir", o.out_dir, "Directory for JSON/CSV outputs");
}

RunConfig resolve(const Overrides& o) {
  RunConfig config;
  if (!o.config_file.empty()) symprep::cli::load_config_file(o.config_file, config);
  if (o.target) config.target = *o.target;
  if (o.target_file) config.target_file = *o.target_file;
  if (o.n) config.num_qubits = *o.n;
  if (o.normalize) config.normalize = true;
  if (o.backend) config.backend = *o.backend;
  if (o.g1) config.g1 = *o.g1;
  if (o.g2) config.g2 = *o.g2;
  if (o.delta1) config.delta1 = *o.delta1;
  if (o.truncation) config.truncation = *o.truncation;
  if (o.samples) config.samples_per_step = *o.samples;
  if (o.skip_zero) config.skip_zero = true;
  if (o.no_stark_compensation) config.stark_compensation = false;
  if (o.precompensate) config.precompensate = true;
  if (o.reference_table2) config.reference_table2 = true;
  if (o.physical_g1) config.physical_g1 = *o.physical_g1;
  if (o.duration) config.chirp.duration = *o.duration;
  if (o.time_step) config.chirp.time_step = *o.time_step;
  if (!o.sweep.empty()) config.sweep_durations = o.sweep;
  if (o.rel_tol) config.rel_tol = *o.rel_tol;
  if (o.out_dir) config.out_dir = *o.out_dir;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic preparation and classification of symmetric qubit states"};
  app.require_subcommand(1);
  Overrides o;

  CLI::App* encode = app.add_subcommand("encode", "Staircase encoding circuit and its verification residual");
  add_common(encode, o);

  CLI::App* prepare = app.add_subcommand("prepare", "Compile and simulate the selective-flop schedule");
  add_common(prepare, o);
  prepare->add_option("--backend", o.backend, "effective | full")
      ->check(CLI::IsMember({"effective", "full"}));
  prepare->add_option("--g1", o.g1, "Ensemble coupling (unit of rates)");
  prepare->add_option("--g2", o.g2, "Extra-qubit coupling in units of g1");
  prepare->add_option("--delta1", o.delta1, "Ensemble detuning in units of g1");
  prepare->add_option("--truncation", o.truncation, "Mode levels of the full backend");
  prepare->add_option("--samples", o.samples, "Trace samples per step");
  prepare->add_flag("--skip-zero", o.skip_zero, "Omit flops whose source amplitude vanishes");
  prepare->add_flag("--no-stark-compensation", o.no_stark_compensation,
                    "Do not fold later Stark phases into the drive phases");
  prepare->add_flag("--precompensate", o.precompensate, "Rotate the encoder target by the measured sector phases");
  prepare->add_flag("--reference-table2", o.reference_table2,
                    "Reference run: N = 4, c_k proportional to 1..5, g2 = 0.1, delta1 = 20");
  prepare->add_option("--physical-g1", o.physical_g1, "Physical g1 for time conversion, e.g. 2pi*20kHz");

  CLI::App* fock = app.add_subcommand("fock-route", "Fock-state synthesis followed by adiabatic mapping");
  add_common(fock, o);
  fock->add_option("--truncation", o.truncation, "Mode levels (default N + 2)");
  fock->add_option("--duration", o.duration, "Sweep duration in units of 1/g");
  fock->add_option("--time-step", o.time_step, "Integration slice in units of 1/g");
  fock->add_option("--sweep", o.sweep, "Additional sweep durations to report")->delimiter(',');

  CLI::App* classify = app.add_subcommand("classify", "Degeneracy configuration of the Majorana roots");
  add_common(classify, o);
  classify->add_option("--rel-tol", o.rel_tol, "Root clustering threshold (chordal distance)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : symprep::cli::kExitConfigError;
  }

  return symprep::cli::run_guarded(
      [&]() {
        const RunConfig config = resolve(o);
        if (encode->parsed()) return symprep::cli::cmd_encode(config, std::cout);
        if (prepare->parsed()) return symprep::cli::cmd_prepare(config, std::cout);
        if (fock->parsed()) return symprep::cli::cmd_fock_route(config, std::cout);
        return symprep::cli::cmd_classify(config, std::cout);
      },
      std::cerr);
}
