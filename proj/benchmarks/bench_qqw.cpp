// Copyright 2026 The QQW Authors
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

#include "qqw/path_sum.hpp"
#include "qqw/sampling.hpp"
#include "qqw/walk.hpp"

namespace {

using namespace qqw;

void BM_QuaternionProduct(benchmark::State& state) {
  Rng rng(1);
  Quaternion a = random_unit_quaternion(rng);
  const Quaternion b = random_unit_quaternion(rng);
  for (auto _ : state) {
    a = a * b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_QuaternionProduct);

void BM_EvolveDelta(benchmark::State& state) {
  Rng rng(2);
  const CoinOperator coin = CoinOperator::make(random_unitary(rng));
  const Spinor phi = random_unit_spinor(rng);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evolve(WalkState::delta(phi), coin, steps));
  state.SetComplexityN(steps);
}
BENCHMARK(BM_EvolveDelta)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_EvolvePeriodic(benchmark::State& state) {
  Rng rng(3);
  const CoinOperator coin = CoinOperator::make(random_unitary(rng));
  std::vector<Spinor> amps(static_cast<std::size_t>(state.range(0)));
  for (Spinor& s : amps) s = random_unit_spinor(rng);
  WalkState s = WalkState::periodic(amps);
  for (auto _ : state) {
    s = evolve_step(s, coin);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvolvePeriodic)->Arg(8)->Arg(1024);

void BM_XiBruteforce(benchmark::State& state) {
  Rng rng(4);
  const CoinOperator coin = CoinOperator::make(random_unitary(rng));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xi_bruteforce(coin, n, n / 2, n - n / 2));
}
BENCHMARK(BM_XiBruteforce)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_XiReduced(benchmark::State& state) {
  Rng rng(4);
  const CoinOperator coin = CoinOperator::make(random_unitary(rng));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xi_reduced(coin, n, n / 2, n - n / 2));
}
BENCHMARK(BM_XiReduced)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

}  // namespace

// The packaged benchmark_main archive is unusable with this toolchain (LTO
// version mismatch), so the entry point is defined here.
BENCHMARK_MAIN();
