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

#include "teraris/special_functions.hpp"

#include <benchmark/benchmark.h>

using namespace teraris;

static void BM_E1(benchmark::State &state)
{
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(exp_integral_e1(x));
}
BENCHMARK(BM_E1)->Arg(1)->Arg(50)->Arg(100)->Arg(1000)->Arg(5000);

static void BM_ScaledEn(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(scaled_exp_integral_en(n, 0.37));
}
BENCHMARK(BM_ScaledEn)->Arg(1)->Arg(16)->Arg(256);
