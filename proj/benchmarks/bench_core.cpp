// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The isac-irs Authors
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

#include "isac/analytics.hpp"
#include "isac/beam_scanning.hpp"
#include "isac/estimation.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace isac;

void BM_Phase1Scan(benchmark::State &state)
{
    ScenarioParams p;
    p.m_re = static_cast<int>(state.range(0));
    p.codebook_size = p.m_re;
    p.scan_symbols = p.m_re;
    const Scenario s = Scenario::make(p);
    const PathGains g = path_gains(s);
    const Codebook cb = dft_codebook(s.m_re(), s.codebook_size());
    Rng rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_phase1(s, g, cb, rng));
}
BENCHMARK(BM_Phase1Scan)->Arg(32)->Arg(64)->Arg(128);

void BM_MlePhase1(benchmark::State &state)
{
    ScenarioParams p;
    p.m_re = static_cast<int>(state.range(0));
    p.codebook_size = p.m_re;
    p.scan_symbols = p.m_re;
    const Scenario s = Scenario::make(p);
    const Codebook cb = dft_codebook(s.m_re(), s.codebook_size());
    Rng rng(2);
    const ScanRecord rec = simulate_phase1(s, path_gains(s), cb, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(mle_phase1(rec.se_echo, cb.columns, s));
}
BENCHMARK(BM_MlePhase1)->Arg(32)->Arg(64)->Arg(128);

void BM_CrbWhole(benchmark::State &state)
{
    const Scenario s = Scenario::defaults();
    const CVector phi = steering(s.m_re(), {0.3});
    for (auto _ : state)
        benchmark::DoNotOptimize(crb_whole(s, phi, s.data_symbols()));
}
BENCHMARK(BM_CrbWhole);

void BM_Analyze(benchmark::State &state)
{
    const Scenario s = Scenario::defaults();
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_Analyze);

} // namespace

BENCHMARK_MAIN();
