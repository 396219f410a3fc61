// SPDX-License-Identifier: Apache-2.0
//
// rankone: tight semidefinite relaxations for multi-user transmit beamforming
// Copyright (C) 2026 The rankone authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "rankone/framework.hpp"
#include "rankone/ris.hpp"
#include "rankone/scenarios.hpp"
#include "rankone/stats.hpp"

using namespace rankone;

namespace {

SystemConfig config(int M) {
  SystemConfig cfg;
  cfg.M = M;
  cfg.U = 2;
  cfg.gamma = {10.0};
  cfg.seed = 5;
  return cfg;
}

void BM_Perfect(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  const auto fp = build_perfect(cfg, gen_channels(cfg));
  for (auto _ : state) benchmark::DoNotOptimize(solve_framework(fp).objective);
}

void BM_Sproc(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  const auto fp = build_sproc(cfg, gen_channels(cfg), radius_r(cfg.M, cfg.rho));
  for (auto _ : state) benchmark::DoNotOptimize(solve_framework(fp).objective);
}

void BM_Chance(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  const auto fp = build_chance(cfg, gen_channels(cfg));
  for (auto _ : state) benchmark::DoNotOptimize(solve_framework(fp).objective);
}

void BM_Compile(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  const auto fp = build_chance(cfg, gen_channels(cfg));
  for (auto _ : state) benchmark::DoNotOptimize(compile(fp).sdp.n());
}

void BM_RisLoop(benchmark::State& state) {
  const auto cfg = config(3);
  const auto ris = gen_ris_channels(cfg, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ris_alternate(cfg, ris, 1).iterations.size());
}

}  // namespace

BENCHMARK(BM_Perfect)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sproc)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Chance)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compile)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RisLoop)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
