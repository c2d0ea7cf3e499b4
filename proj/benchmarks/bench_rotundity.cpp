// Copyright 2026 The Authors.
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

#include <benchmark/benchmark.h>

#include "gammaforge/amalgam.hpp"

using namespace gammaforge;

namespace {

GammaPresentation locus(std::size_t n, const std::vector<std::string>& gens) {
  static const auto base = std::make_shared<const BasePresentation>();
  return GammaPresentation::create(VarietyPresentation::parse(base, n, gens, true), 3);
}

}  // namespace

static void BM_StronglyRotundSweep(benchmark::State& state) {
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // Fresh presentation each round so image dimensions are not cached.
    const auto p = locus(2, {"y2 - x1*y1 - 1"});
    benchmark::DoNotOptimize(is_strongly_rotund(p, {h, 4, false}).matrices_checked);
  }
}
BENCHMARK(BM_StronglyRotundSweep)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ImageDimJacobian(benchmark::State& state) {
  const IntMatrix m{{1, -2}};
  for (auto _ : state) {
    const auto p = locus(2, {"x2 - x1^2 - y1", "y2 - 2*y1 + x1"});
    benchmark::DoNotOptimize(p.image_dim(m));
  }
}
BENCHMARK(BM_ImageDimJacobian)->Unit(benchmark::kMicrosecond);

static void BM_ImageDimElimination(benchmark::State& state) {
  const IntMatrix m{{1, -1}};
  for (auto _ : state) {
    const auto p = locus(2, {"x2 - x1^2 - y1", "y2 - 2*y1 + x1"});
    benchmark::DoNotOptimize(p.image_dim(m, ImageDimMethod::Elimination));
  }
}
BENCHMARK(BM_ImageDimElimination)->Unit(benchmark::kMillisecond);

static void BM_BuildStage1(benchmark::State& state) {
  const auto base = std::make_shared<const BasePresentation>();
  for (auto _ : state) benchmark::DoNotOptimize(build_stage(base, 1).current.n());
}
BENCHMARK(BM_BuildStage1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
