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


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "symprep/classifier.hpp"
#include "symprep/compiler.hpp"
#include "symprep/encoder.hpp"
#include "symprep/fock_route.hpp"

namespace {

using namespace symprep;

SymmetricCoefficients ramp(int n) {
  std::vector<double> c(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = k + 1.0;
  return SymmetricCoefficients::from_real(c);
}

void BM_StaircaseEncode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymmetricCoefficients c = ramp(n);
  for (auto _ : state) {
    const EncodingCircuit circuit = build_circuit(staircase_decompose(c), n);
    benchmark::DoNotOptimize(apply_circuit(circuit, StateVector::ground(n)));
  }
}
BENCHMARK(BM_StaircaseEncode)->DenseRange(4, 12, 4);

void BM_PropagatorBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Schedule s = make_schedule(n, ramp(n));
  const StepPlan& step = s.steps.back();
  const RegisterShape shape{n, 0};
  const AddressingSpec spec = AddressingSpec::prefix(n, step.n);
  const Hamiltonian h = build_effective_rotating(shape, spec, step.params);
  for (auto _ : state) benchmark::DoNotOptimize(Propagator(h));
}
BENCHMARK(BM_PropagatorBuild)->DenseRange(4, 10, 2);

void BM_ExecuteEffective(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Schedule s = make_schedule(n, ramp(n));
  for (auto _ : state) benchmark::DoNotOptimize(execute(s));
}
BENCHMARK(BM_ExecuteEffective)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ExecuteFullBus(benchmark::State& state) {
  const Schedule s = make_schedule(4, ramp(4));
  ExecuteOptions options;
  options.backend = Backend::kFull;
  options.boson_dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(execute(s, options));
}
BENCHMARK(BM_ExecuteFullBus)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  std::vector<Complex> c(static_cast<std::size_t>(n + 1));
  for (auto& z : c) z = Complex(gauss(rng), gauss(rng));
  const SymmetricCoefficients target(c);
  for (auto _ : state) benchmark::DoNotOptimize(classify(target));
}
BENCHMARK(BM_Classify)->RangeMultiplier(2)->Range(4, 32);

void BM_FockRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymmetricCoefficients target = SymmetricCoefficients::basis(n, n / 5 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(fock_route_prepare(target, ChirpProfile{}, n + 2));
}
BENCHMARK(BM_FockRoute)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
