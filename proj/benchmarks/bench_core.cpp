/*
 * Copyright 2026 the ivbfwn authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ivbfwn/aggregation.hpp"
#include "ivbfwn/arithmetic.hpp"
#include "ivbfwn/engine.hpp"
#include "ivbfwn/io.hpp"

using namespace ivbfwn;

namespace {

IvbfwnNumber random_number(std::mt19937_64& eng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto pos = [&] {
        double a = unit(eng), b = unit(eng);
        if (a > b) std::swap(a, b);
        return PosInterval(a, b);
    };
    auto neg = [&] {
        double a = -unit(eng), b = -unit(eng);
        if (a > b) std::swap(a, b);
        return NegInterval(a, b);
    };
    return {pos(), pos(), pos(), neg(), neg(), neg(), unit(eng)};
}

DecisionMatrix random_matrix(std::size_t rows, std::size_t cols) {
    std::mt19937_64 eng(42);
    std::vector<std::string> alternatives, criteria;
    for (std::size_t i = 0; i < rows; ++i) alternatives.push_back("A_" + std::to_string(i + 1));
    for (std::size_t j = 0; j < cols; ++j) criteria.push_back("C_" + std::to_string(j + 1));
    std::vector<std::vector<IvbfwnNumber>> cells;
    for (std::size_t i = 0; i < rows; ++i) {
        auto& row = cells.emplace_back();
        for (std::size_t j = 0; j < cols; ++j) row.push_back(random_number(eng));
    }
    return {alternatives, criteria, std::move(cells)};
}

}  // namespace

static void BM_Add(benchmark::State& state) {
    std::mt19937_64 eng(1);
    const IvbfwnNumber a = random_number(eng), b = random_number(eng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(add(a, b));
    }
}
BENCHMARK(BM_Add);

static void BM_Scale(benchmark::State& state) {
    std::mt19937_64 eng(2);
    const IvbfwnNumber a = random_number(eng);
    const Scalar lambda(0.37);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scale(lambda, a));
    }
}
BENCHMARK(BM_Scale);

static void BM_AggregateAverage(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 eng(3);
    std::vector<IvbfwnNumber> items;
    std::vector<double> weights;
    std::uniform_real_distribution<double> w(0.05, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        items.push_back(random_number(eng));
        weights.push_back(w(eng));
    }
    const WeightVector wv(weights);
    for (auto _ : state) {
        benchmark::DoNotOptimize(aggregate_average(items, wv));
    }
    state.SetComplexityN(static_cast<int64_t>(n));
}
BENCHMARK(BM_AggregateAverage)->Arg(4)->Arg(16)->Arg(64)->Arg(256)->Complexity();

static void BM_RankAlternatives(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const DecisionMatrix m = random_matrix(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_alternatives(m, OperatorChoice::Average));
    }
    state.SetComplexityN(static_cast<int64_t>(n));
}
BENCHMARK(BM_RankAlternatives)->Arg(4)->Arg(16)->Arg(64)->Complexity();

static void BM_ParseMatrix(benchmark::State& state) {
    const std::string text = io::serialize_matrix(random_matrix(16, 16));
    for (auto _ : state) {
        benchmark::DoNotOptimize(io::parse_matrix(text));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseMatrix);

static void BM_SerializeMatrix(benchmark::State& state) {
    const DecisionMatrix m = random_matrix(16, 16);
    for (auto _ : state) {
        benchmark::DoNotOptimize(io::serialize_matrix(m));
    }
}
BENCHMARK(BM_SerializeMatrix);

BENCHMARK_MAIN();
