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
#include "telegain/fock.hpp"
#include "telegain/transition.hpp"

namespace {

using namespace telegain;

void BM_TransitionTable(benchmark::State& state) {
  const auto ch = teleport_channel({1.0, 0.2}, 0.9);
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TransitionTable table(ch, cutoff);
    benchmark::DoNotOptimize(table.tail(2, 2));
  }
}
BENCHMARK(BM_TransitionTable)->Arg(8)->Arg(20)->Arg(40);

void BM_ApplyChannel(benchmark::State& state) {
  const auto ch = teleport_channel({1.0, 0.2}, 0.9);
  const int cutoff = default_cutoff(ch);
  FockOperator rho(2);
  rho(0, 0) = 0.3;
  rho(1, 1) = 0.5;
  rho(2, 2) = 0.2;
  rho(0, 1) = rho(1, 0) = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_channel(ch, rho, cutoff));
  }
}
BENCHMARK(BM_ApplyChannel);

}  // namespace
