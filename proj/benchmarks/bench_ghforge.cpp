/**************************************************************************
 * Copyright 2026 The ghforge Authors
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

#include <ghforge/ghforge.hpp>

namespace {

using namespace ghforge;

FiniteField field_for(std::int64_t q) {
    switch (q) {
    case 4:
        return FiniteField::create(2, 2);
    case 8:
        return FiniteField::create(2, 3);
    case 9:
        return FiniteField::create(3, 2);
    case 16:
        return FiniteField::create(2, 4);
    case 27:
        return FiniteField::create(3, 3);
    default:
        return FiniteField::create(static_cast<std::uint32_t>(q), 1);
    }
}

void BM_VerifyT33(benchmark::State& state) {
    const auto field = field_for(state.range(0));
    const auto m = construct_t33(field);
    const VerifyOptions options{.threads = static_cast<unsigned>(state.range(1))};
    for (auto _ : state) {
        auto report = verify_gh(m, m.claimed_lambda(), options);
        benchmark::DoNotOptimize(report);
    }
    const double k = m.order();
    state.counters["order"] = k;
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(k * (k - 1) / 2 * k));
}
BENCHMARK(BM_VerifyT33)
    ->Args({5, 1})
    ->Args({7, 1})
    ->Args({8, 1})
    ->Args({9, 1})
    ->Args({9, 0})
    ->Unit(benchmark::kMillisecond);

void BM_VerifyT32(benchmark::State& state) {
    const auto m = construct_t32(field_for(state.range(0)));
    for (auto _ : state) {
        auto report = verify_gh(m, m.claimed_lambda(), {.threads = 1});
        benchmark::DoNotOptimize(report);
    }
    state.counters["order"] = m.order();
}
BENCHMARK(BM_VerifyT32)->Arg(9)->Arg(16)->Arg(27)->Unit(benchmark::kMillisecond);

void BM_ConstructT33(benchmark::State& state) {
    const auto field = field_for(state.range(0));
    for (auto _ : state) {
        auto m = construct_t33(field);
        benchmark::DoNotOptimize(m.data().data());
    }
}
BENCHMARK(BM_ConstructT33)->Arg(5)->Arg(9)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_FieldCreate(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    const auto n = static_cast<std::uint32_t>(state.range(1));
    for (auto _ : state) {
        auto f = FiniteField::create(p, n);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_FieldCreate)->Args({3, 2})->Args({2, 8})->Args({3, 6})->Args({2, 16});

void BM_ClassifyGf5(benchmark::State& state) {
    const auto field = FiniteField::create(5, 1);
    for (auto _ : state) {
        auto counts = classify_all_functions(field, 1);
        benchmark::DoNotOptimize(counts);
    }
}
BENCHMARK(BM_ClassifyGf5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
