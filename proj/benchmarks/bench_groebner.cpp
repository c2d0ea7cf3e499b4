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

#include "gammaforge/ideal.hpp"

using namespace gammaforge;

static void BM_TwistedCubic(benchmark::State& state) {
  for (auto _ : state) {
    const auto i = Ideal::parse({"x", "y", "z"}, {"y - x^2", "z - x^3"});
    benchmark::DoNotOptimize(ideal_dim(i));
  }
}
BENCHMARK(BM_TwistedCubic);

// Katsura-style system in n variables.
static void BM_Katsura(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> vars, gens;
  for (int i = 0; i <= n; ++i) vars.push_back("u" + std::to_string(i));
  auto u = [&](int i) { return vars[static_cast<std::size_t>(std::abs(i))]; };
  std::string lin = "-1";
  for (int i = -n; i <= n; ++i) lin += " + " + u(i);
  gens.push_back(lin);
  for (int m = 0; m < n; ++m) {
    std::string g = "-" + u(m);
    for (int i = -n; i <= n; ++i)
      if (std::abs(m - i) <= n) g += " + " + u(i) + "*" + u(m - i);
    gens.push_back(g);
  }
  for (auto _ : state) {
    const auto i = Ideal::parse(vars, gens);
    benchmark::DoNotOptimize(i.groebner().elements().size());
  }
}
BENCHMARK(BM_Katsura)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Saturate(benchmark::State& state) {
  const std::vector<std::string> vars{"x1", "x2", "y1", "y2"};
  const auto i = Ideal::parse(vars, {"y1*y2 - x1*y1", "x2*y2 - y1^2"});
  const auto f = parse_poly("y1*y2", vars);
  for (auto _ : state) benchmark::DoNotOptimize(saturate(i, f).groebner().elements().size());
}
BENCHMARK(BM_Saturate)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
