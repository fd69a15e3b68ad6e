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

#include "teraris/ergodic.hpp"

#include <benchmark/benchmark.h>

using namespace teraris;

static void BM_ClosedFormRandom(benchmark::State &state)
{
    RandomEngine rng = stream_engine(3, 0);
    const auto cov = random_covariance(state.range(0), rng);
    const LinkBudget lb{10.0, 1.0};
    const EffectiveMatrices em = build_effective_matrices(PowerAllocation::two_user(0.8), lb, cov, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(closed_form_capacity(em.signal, em.interference, lb));
}
BENCHMARK(BM_ClosedFormRandom)->Arg(2)->Arg(8)->Arg(32);

// 256 equal eigenvalues, the default 16 x 16 channel with i.i.d. entries.
static void BM_ClosedFormScaledIdentity(benchmark::State &state)
{
    const auto cov = WhitenedCovariance::scaled_identity(state.range(0), 1e-3);
    const LinkBudget lb{1.0, 1e-12};
    const EffectiveMatrices em = build_effective_matrices(PowerAllocation::two_user(0.8), lb, cov, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(closed_form_capacity(em.signal, em.interference, lb));
}
BENCHMARK(BM_ClosedFormScaledIdentity)->Arg(16)->Arg(256);
