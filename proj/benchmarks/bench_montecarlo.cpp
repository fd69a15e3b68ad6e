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

#include "teraris/montecarlo.hpp"

#include <benchmark/benchmark.h>

using namespace teraris;

static void BM_Trial(benchmark::State &state)
{
    const PreparedScenario sc = prepare_scenario(ScenarioConfig{});
    const auto scheme = static_cast<PaScheme>(state.range(0));
    const RateTargets targets{5.0, 5.0};
    RandomEngine rng = stream_engine(1, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_trial(sc, scheme, targets, rng));
    state.SetLabel(to_string(scheme));
}
BENCHMARK(BM_Trial)->DenseRange(0, 2);

static void BM_OutageSweep(benchmark::State &state)
{
    const ScenarioConfig cfg;
    SweepSpec spec = default_outage_spec(cfg);
    spec.trials = state.range(0);
    spec.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_outage_sweep(spec, cfg));
}
BENCHMARK(BM_OutageSweep)->Arg(10000)->Unit(benchmark::kMillisecond);
