// Copyright 2026 The qri developers
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

#include "qri/experiments.hpp"
#include "qri/optimize.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

void BM_Quantumness(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  qri::SplitMix64 rng(1);
  const qri::DensityMatrix rho = qri::random_density(d, d, rng);
  const qri::ObservableBasis a = qri::random_basis(d, rng);
  const qri::ObservableBasis b = qri::random_basis(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qri::quantumness(rho, a, b));
  }
}
BENCHMARK(BM_Quantumness)->DenseRange(2, 8);

void BM_CoherenceRelEnt(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  qri::SplitMix64 rng(2);
  const qri::DensityMatrix rho = qri::random_density(d, d, rng);
  const qri::ObservableBasis basis = qri::random_basis(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qri::coherence_rel_ent(rho, basis));
  }
}
BENCHMARK(BM_CoherenceRelEnt)->DenseRange(2, 8);

void BM_HermitianEig(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  qri::SplitMix64 rng(3);
  const qri::DensityMatrix rho = qri::random_density(d, d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qri::hermitian_eig(rho.matrix()));
  }
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(2, 16);

void BM_HaarUnitary(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  qri::SplitMix64 rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qri::haar_unitary(d, rng));
  }
}
BENCHMARK(BM_HaarUnitary)->RangeMultiplier(2)->Range(2, 16);

void BM_MaxQOverB(benchmark::State& state) {
  const qri::DensityMatrix plus = qri::bloch_pure(kPi / 2, 0.0);
  const qri::ObservableBasis a = qri::named_basis("computational", 2);
  const int grid_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qri::max_q_over_b(plus, a, grid_n, 200));
  }
}
BENCHMARK(BM_MaxQOverB)->Arg(16)->Arg(32)->Arg(64);

void BM_Fig1Sweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qri::fig1_sweep(181, 1));
  }
}
BENCHMARK(BM_Fig1Sweep);

void BM_AxiomSuiteQ4(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qri::run_axiom_suite(qri::AxiomId::q4, 20, 1, qri::default_axiom_tolerance(qri::AxiomId::q4), 1));
  }
}
BENCHMARK(BM_AxiomSuiteQ4);

}  // namespace

BENCHMARK_MAIN();
