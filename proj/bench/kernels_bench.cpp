// Copyright 2026 The mbprice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial against OpenMP execution of the two heavy kernels.

#include "benchmark/benchmark.h"
#include "mbprice/fast_bounds.hpp"
#include "mbprice/pricing.hpp"
#include "mbprice/random_instances.hpp"

namespace {

using namespace mbprice;

pricing::MarketModel four_assets(int steps) {
  pricing::MarketModel model;
  model.steps = steps;
  for (const Rational d : {Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(4, 5)}) {
    model.assets.push_back({100, d, Rational(3, 2)});
  }
  model.strike = 400;
  return model;
}

void BM_SupervertexExpectation(benchmark::State& state, Execution execution) {
  const auto model = four_assets(static_cast<int>(state.range(0)));
  const polytope::PolytopeSpec spec(pricing::b_from_market(model));
  const auto payoff = pricing::payoff(model);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fast::supervertex_expectation(payoff, spec, {}, model.steps, execution));
  }
}

void BM_MinimizerBound(benchmark::State& state, Execution execution) {
  auto model = four_assets(static_cast<int>(state.range(0)));
  const polytope::PolytopeSpec spec(pricing::b_from_market(model));
  const auto data = fast::make_minimizer_data(pricing::certificate(model), spec);
  for (auto _ : state) benchmark::DoNotOptimize(fast::minimizer_bound(data, model.steps, execution));
}

void BM_TreeExtremum(benchmark::State& state, Execution execution) {
  random::Rng rng(5);
  const int m = 2, n = static_cast<int>(state.range(0));
  const polytope::PolytopeSpec spec(random::random_b(rng, m));
  const auto payoff = tree::Payoff::european(n, random::random_european(rng, m, n, 2));
  tree::TreeOptions options;
  options.execution = execution;
  for (auto _ : state) benchmark::DoNotOptimize(tree::tree_extremum(payoff, spec, lp::Direction::maximize, options));
}

BENCHMARK_CAPTURE(BM_SupervertexExpectation, serial, Execution::serial)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SupervertexExpectation, parallel, Execution::parallel)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinimizerBound, serial, Execution::serial)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinimizerBound, parallel, Execution::parallel)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TreeExtremum, serial, Execution::serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TreeExtremum, parallel, Execution::parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
