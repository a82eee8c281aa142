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

#include "telegain/channel.hpp"
#include "telegain/phasespace.hpp"

namespace {

using namespace telegain;

void BM_KernelBuild(benchmark::State& state) {
  const GridLayout layout{8.0, static_cast<int>(state.range(0))};
  const auto ch = teleport_channel({1.0, 0.2}, state.range(1) / 100.0);
  for (auto _ : state) {
    ChannelKernel kernel(ch, layout);
    benchmark::DoNotOptimize(&kernel);
  }
}
BENCHMARK(BM_KernelBuild)->Args({201, 90})->Args({401, 90})->Args({401, 100});

void BM_KernelApply(benchmark::State& state) {
  const GridLayout layout{8.0, static_cast<int>(state.range(0))};
  const ChannelKernel kernel(teleport_channel({1.0, 0.2}, 0.9), layout);
  const auto w = wigner_mn(1, 1, layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.apply(w));
  }
}
BENCHMARK(BM_KernelApply)->Arg(201)->Arg(401);

void BM_WignerMN(benchmark::State& state) {
  const GridLayout layout{8.0, 401};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wigner_mn(n, n, layout));
  }
}
BENCHMARK(BM_WignerMN)->Arg(0)->Arg(6);

}  // namespace
