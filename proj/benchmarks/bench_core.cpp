// Copyright 2026 The Qerase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qerase/channels.hpp"
#include "qerase/correlations.hpp"
#include "qerase/ensembles.hpp"
#include "qerase/qmath.hpp"

namespace {

using qerase::ComplexMatrix;
using qerase::DensityOperator;
using qerase::Rng;
using qerase::SubsystemDims;

DensityOperator sample_state(int dim_A, int dim_B, std::uint64_t seed) {
  Rng rng(seed);
  return qerase::random_density_matrix(SubsystemDims({dim_A, dim_B}, {"A", "B"}),
                                       dim_A * dim_B, rng);
}

void BM_PartialTrace(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const DensityOperator rho = sample_state(dim, dim, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qerase::partial_trace(rho, {"A"}));
  }
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(3)->Arg(4);

void BM_TensorProduct(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(2);
  const DensityOperator a = qerase::random_density_matrix(SubsystemDims::single("A", dim),
                                                          dim, rng);
  const DensityOperator b = qerase::random_density_matrix(SubsystemDims::single("B", dim),
                                                          dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qerase::tensor(a, b));
  }
}
BENCHMARK(BM_TensorProduct)->Arg(2)->Arg(4);

void BM_VonNeumannEntropy(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const DensityOperator rho = sample_state(dim, dim, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qerase::von_neumann_entropy(rho));
  }
}
BENCHMARK(BM_VonNeumannEntropy)->Arg(2)->Arg(4);

void BM_ApplyLocalChannel(benchmark::State& state) {
  Rng rng(4);
  const DensityOperator rho = sample_state(2, 2, 5);
  const auto channel = qerase::random_kraus_channel(2, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qerase::apply_local_channel(channel, rho, "B"));
  }
}
BENCHMARK(BM_ApplyLocalChannel);

void BM_RunProcess(benchmark::State& state) {
  Rng rng(6);
  const DensityOperator rho = sample_state(2, 2, 7);
  const auto channel = qerase::random_kraus_channel(2, 4, rng);
  const auto dilation = qerase::stinespring_dilation(channel, "B", 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qerase::run_process(rho, dilation));
  }
}
BENCHMARK(BM_RunProcess);

void BM_Discord(benchmark::State& state) {
  const int dim_B = static_cast<int>(state.range(0));
  const DensityOperator rho = sample_state(2, dim_B, 8);
  qerase::OptimizerConfig cfg;
  if (dim_B > 2) {
    cfg.grid_resolution = 12;  // d >= 3 uses grid^2 seeded samples
    cfg.random_restarts = 2;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(qerase::discord(rho, "B", cfg));
  }
}
BENCHMARK(BM_Discord)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
