// Copyright 2026 The telegain Authors
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

#include "telegain/optimize.hpp"
#include "telegain/swap.hpp"

namespace {

using namespace telegain;

void BM_MetricEvaluation(benchmark::State& state) {
  const auto metric = static_cast<Metric>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_metric(metric, 0.7, {1.0, 0.2}, 0.8));
  }
}
BENCHMARK(BM_MetricEvaluation)->DenseRange(0, 2);

void BM_OptimizeGain(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_gain(Metric::kFState, 0.7, {1.0, 0.2}));
  }
}
BENCHMARK(BM_OptimizeGain)->Unit(benchmark::kMillisecond);

void BM_OptimizeGainLn(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_gain_ln(0.8, {1.0, 0.2}));
  }
}
BENCHMARK(BM_OptimizeGainLn)->Unit(benchmark::kMillisecond);

}  // namespace
