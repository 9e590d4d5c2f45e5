// Copyright 2026 The graev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "graev/extension.hpp"
#include "graev/joiner.hpp"
#include "graev_cli/cli.hpp"

namespace {

using graev::GraevExtension;

void BM_PrenormDp(benchmark::State& state) {
  const auto d = graev::cli::bench_metric();
  const auto g = graev::cli::bench_word(d.size(), static_cast<std::size_t>(state.range(0)));
  const GraevExtension ext(d);
  for (auto _ : state) benchmark::DoNotOptimize(ext.prenorm_dp(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PrenormDp)->Arg(10)->Arg(20)->Arg(40)->Arg(80)->Complexity(benchmark::oNCubed);

void BM_PrenormBruteForce(benchmark::State& state) {
  const auto d = graev::cli::bench_metric();
  const auto g = graev::cli::bench_word(d.size(), static_cast<std::size_t>(state.range(0)));
  const GraevExtension ext(d);
  for (auto _ : state) benchmark::DoNotOptimize(ext.prenorm_bruteforce(g));
}
BENCHMARK(BM_PrenormBruteForce)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyNeighbourhood(benchmark::State& state) {
  const auto space = graev::FiniteTopology::discrete(graev::PointSet::standard(3));
  const auto w = graev::cli::bench_word(3, static_cast<std::size_t>(state.range(0)));
  const auto inst =
      graev::make_joiner_instance(space, w, graev::NeighbourhoodChoice::kFullSpace);
  for (auto _ : state) benchmark::DoNotOptimize(graev::verify_neighbourhood(inst).verdict);
}
BENCHMARK(BM_VerifyNeighbourhood)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
