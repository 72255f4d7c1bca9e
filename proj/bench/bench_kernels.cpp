// Copyright 2026 The qcohere Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference loops against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS / QCOHERE_THREADS.

#include <benchmark/benchmark.h>

#include "qcohere/kernels.hpp"
#include "qcohere/random.hpp"

using namespace qcohere;
using namespace qcohere::kernels;

namespace {

template <bool Parallel>
void BM_TriangleSlacks(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const long count = state.range(1);
  for (auto _ : state) {
    const TriangleSummary s = Parallel ? omp::triangle_slacks(d, count, Ensemble::hilbert_schmidt, 1)
                                       : serial::triangle_slacks(d, count, Ensemble::hilbert_schmidt, 1);
    benchmark::DoNotOptimize(s.min_slack);
  }
  state.SetItemsProcessed(state.iterations() * count);
  state.counters["workers"] = Parallel ? worker_count() : 1;
}

template <bool Parallel>
void BM_ClosestProduct(benchmark::State& state) {
  const Dims dims(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    const ProductSummary s = Parallel ? omp::closest_product(dims, 16, 200, 1) : serial::closest_product(dims, 16, 200, 1);
    benchmark::DoNotOptimize(s.max_violation);
  }
  state.SetItemsProcessed(state.iterations() * 16 * 200);
}

template <bool Parallel>
void BM_EvaluateRows(benchmark::State& state) {
  Rng rng(3);
  std::vector<DensityMatrix> states;
  for (int i = 0; i < state.range(0); ++i) states.push_back(hilbert_schmidt({2, 2}, rng));
  const BasisSpec b = BasisSpec::computational(4);
  const std::vector<DecompositionOptions> opts(1);
  for (auto _ : state) {
    auto rows = Parallel ? omp::evaluate_rows(states, b, opts, Columns::full)
                         : serial::evaluate_rows(states, b, opts, Columns::full);
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_TriangleSlacks<false>)->Args({2, 4000})->Args({8, 1000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TriangleSlacks<true>)->Args({2, 4000})->Args({8, 1000})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClosestProduct<false>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosestProduct<true>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateRows<false>)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateRows<true>)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
