// Copyright 2026 The fourport Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "fourport/engine.hpp"
#include "fourport/experiments.hpp"
#include "fourport/input_state.hpp"
#include "fourport/multiport.hpp"
#include "fourport/permanent.hpp"

namespace fourport {
namespace {

ComplexMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(g(rng), g(rng));
  return m;
}

WavepacketSpec partial_overlap_spec() {
  return wavelength_to_spec(780e-9, 5e-9, {0.0, 20e-6, -35e-6, 50e-6});
}

void BM_Permanent(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_Permanent)->DenseRange(4, 16, 4);

void BM_BuildInputState(benchmark::State& state) {
  const auto expansion = gram_schmidt(partial_overlap_spec());
  for (auto _ : state) benchmark::DoNotOptimize(build_input_state(expansion));
}
BENCHMARK(BM_BuildInputState);

void BM_Evolve(benchmark::State& state) {
  const auto input = build_input_state(gram_schmidt(partial_overlap_spec()));
  const auto u = build_four_port(0.3, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(input, u));
}
BENCHMARK(BM_Evolve);

void BM_SimulatePoint(benchmark::State& state) {
  const auto spec = partial_overlap_spec();
  const auto u = build_four_port(0.3, 1.1).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(spec, u));
}
BENCHMARK(BM_SimulatePoint);

void BM_FringeEnvelope(benchmark::State& state) {
  const auto config = stepwise_config();
  for (auto _ : state)
    benchmark::DoNotOptimize(fringe_envelope(config, PathLengths{0, 0, 100e-6, 400e-6}));
}
BENCHMARK(BM_FringeEnvelope)->Unit(benchmark::kMillisecond);

void BM_ContinuousSweep(benchmark::State& state) {
  auto config = continuous_config(default_continuous_grid());
  config.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config));
}
BENCHMARK(BM_ContinuousSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace fourport

BENCHMARK_MAIN();
