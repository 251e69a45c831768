// Copyright 2026 The zmf Authors.
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

#include "zmf/analysis.hpp"
#include "zmf/densities.hpp"
#include "zmf/meijer.hpp"
#include "zmf/oracle.hpp"
#include "zmf/zmf.hpp"

namespace {

void BM_W1Heavy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zmf::w1(1.0, {0.3, 4.0}));
}
BENCHMARK(BM_W1Heavy);

void BM_W2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zmf::w2(2.0, 0.7));
}
BENCHMARK(BM_W2);

void BM_W3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zmf::w3(4.0, 2.5));
}
BENCHMARK(BM_W3)->Unit(benchmark::kMillisecond);

void BM_WRealS4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zmf::w_real_s(4, 8.0, 2.5));
}
BENCHMARK(BM_WRealS4)->Unit(benchmark::kMillisecond);

void BM_MeijerMB(benchmark::State& state) {
  const auto spec = zmf::meijer::w3_kernel(0.5, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(zmf::meijer::meijer_mb(spec));
}
BENCHMARK(BM_MeijerMB)->Unit(benchmark::kMillisecond);

void BM_GRecursion(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zmf::density::g_recursion(r, 0.4, 1e-10));
}
BENCHMARK(BM_GRecursion)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Torus(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zmf::oracle::torus_quadrature(r, 1.0, 0.7));
}
BENCHMARK(BM_Torus)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  zmf::oracle::QuadratureConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zmf::oracle::monte_carlo(3, 0.0, 2.0, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_ZerosK3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zmf::analysis::find_zeros_w1(3.0, 20.0));
}
BENCHMARK(BM_ZerosK3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
