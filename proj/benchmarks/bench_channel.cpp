// teraris - RIS-assisted NOMA-MIMO link simulation for terahertz bands
// Copyright (C) 2026 The teraris authors
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

#include "teraris/channel_assembly.hpp"

#include <benchmark/benchmark.h>

using namespace teraris;

static void BM_RisChannelMatrix(benchmark::State &state)
{
    ScenarioConfig cfg;
    cfg.ris.element_count = static_cast<int>(state.range(0));
    const RisParams ris = ris_params(cfg, User::far);
    for (auto _ : state)
        benchmark::DoNotOptimize(ris_channel_matrix(ris, cfg.channel.frequency_hz, cfg.channel.absorption_coeff));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RisChannelMatrix)->Arg(50)->Arg(200)->Arg(800);

static void BM_UserChannel(benchmark::State &state)
{
    const ScenarioConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(user_channel(cfg, User::near));
}
BENCHMARK(BM_UserChannel);
