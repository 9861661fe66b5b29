// Copyright 2026 The swapbit Authors
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

#include "swapbit/density.hpp"
#include "swapbit/entanglement.hpp"
#include "swapbit/gates.hpp"
#include "swapbit/linalg.hpp"
#include "swapbit/protocol.hpp"
#include "swapbit/random.hpp"
#include "swapbit/spaces.hpp"

namespace {

using namespace swapbit;

DensityOperator phi_state(std::size_t n) { return DensityOperator::from_pure(uniform_device_state(DeviceBasis(n))); }

void BM_HermitianEigen(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix h = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(h));
}
BENCHMARK(BM_HermitianEigen)->RangeMultiplier(2)->Range(4, 64);

void BM_Kron(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = random_matrix(rng, n, n);
  const ComplexMatrix b = random_matrix(rng, n + 1, n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->Arg(4)->Arg(8)->Arg(16);

void BM_ApplyJoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const auto gate = random_gate(n, 2, 3);
  const DensityOperator rd = random_mixed_state(rng, n, n);
  const DensityOperator rt = random_mixed_state(rng, n + 1, n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(apply(gate, rd, rt));
}
BENCHMARK(BM_ApplyJoint)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_KrausEvolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  const auto gate = random_gate(n, 2, 4);
  const KrausSet ks = kraus_set(gate);
  const ComplexMatrix rho = kron(random_mixed_state(rng, n, n).matrix(), random_mixed_state(rng, n + 1, n + 1).matrix());
  for (auto _ : state) benchmark::DoNotOptimize(ks.evolve(rho));
}
BENCHMARK(BM_KrausEvolve)->Arg(2)->Arg(4)->Arg(8);

void BM_ReducedDeviceStates(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto gate = ideal_gate(n);
  const DensityOperator phi = phi_state(n);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_device_states(gate, phi));
}
BENCHMARK(BM_ReducedDeviceStates)->RangeMultiplier(2)->Range(2, 64);

void BM_HelstromBound(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto r = reduced_device_states(ideal_gate(n), phi_state(n));
  for (auto _ : state) benchmark::DoNotOptimize(helstrom_bound(r.rho0, r.rho1));
}
BENCHMARK(BM_HelstromBound)->RangeMultiplier(2)->Range(2, 64);

void BM_PptCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DensityOperator out = run_protocol(ideal_gate(n), phi_state(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ppt_check(out));
}
BENCHMARK(BM_PptCheck)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_IffTheoremCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  const auto gate = random_gate(n, 2, 5);
  const DensityOperator rd = random_pure_state(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(iff_theorem_check(gate, rd));
}
BENCHMARK(BM_IffTheoremCheck)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
