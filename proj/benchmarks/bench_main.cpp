/**************************************************************************
 * bench_main.cpp
 *
 * Copyright 2026 The lrc4 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#include <benchmark/benchmark.h>

#include <random>

#include "lrc4/constructions.hpp"
#include "lrc4/lrc.hpp"

using namespace lrc4;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<F4> entries(rows * cols);
    for (auto& x : entries) x = F4::from_bits(static_cast<std::uint8_t>(rng() & 3u));
    return Matrix(rows, cols, std::move(entries));
}

void BM_Rref(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = random_matrix(n, 2 * n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(32)->Arg(64);

void BM_WeightDistribution(benchmark::State& state) {
    const auto ell = static_cast<std::size_t>(state.range(0));
    const LinearCode c = gtp34_family(ell).code;
    EnumerationOptions opts;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(c, opts));
    state.counters["k"] = static_cast<double>(c.dimension());
}
BENCHMARK(BM_WeightDistribution)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DiscoverGroups(benchmark::State& state) {
    const LinearCode c = LinearCode::from_generator(g17());
    for (auto _ : state) benchmark::DoNotOptimize(discover_repair_groups(c, 3, 3));
}
BENCHMARK(BM_DiscoverGroups)->Unit(benchmark::kMillisecond);

void BM_SpreadCertificate(benchmark::State& state) {
    const BuiltCode b = spread_construction_3_4_d12(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(certify_spread(b));
}
BENCHMARK(BM_SpreadCertificate)->Arg(5)->Arg(17)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
