// Copyright 2026 The kanjinet Authors
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

// Parallel metric kernels against their serial reference versions.
// Run with --benchmark_counters_tabular=true; Arg is the OpenMP thread count.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "kanjinet/generators.hpp"
#include "kanjinet/metrics.hpp"
#include "kanjinet/metrics_serial.hpp"

namespace {

using namespace kanjinet;

const SimpleGraph& host() {
  static const SimpleGraph g = [] {
    FitnessConfig cfg;
    cfg.n = 3000;
    cfg.seed = 7;
    cfg.link = ThresholdRule{threshold_for_edge_count(draw_fitness(cfg), 30000)};
    return extract_maximal_component(fitness_network(cfg)).graph;
  }();
  return g;
}

void BM_PathsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::path_statistics(host()));
}

void BM_PathsParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(path_statistics(host()));
}

void BM_ClusteringSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::local_clustering(host()));
}

void BM_ClusteringParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(local_clustering(host()));
}

void BM_CRandSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::c_rand_baseline(3444, 28358, 8, 1));
}

void BM_CRandParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(c_rand_baseline(3444, 28358, 8, 1));
}

}  // namespace

BENCHMARK(BM_PathsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathsParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusteringSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusteringParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CRandSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CRandParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
