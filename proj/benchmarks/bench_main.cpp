// Copyright 2026 The subarch Authors
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

#include "subarch/architecture.hpp"
#include "subarch/candidates.hpp"
#include "subarch/covering.hpp"
#include "subarch/enumeration.hpp"
#include "subarch/isomorphism.hpp"
#include "subarch/mapping.hpp"

namespace subarch {
namespace {

void BM_Census(benchmark::State& state, const char* device) {
  const Architecture arch = bundled_architecture(device);
  for (auto _ : state) benchmark::DoNotOptimize(census(arch));
}
BENCHMARK_CAPTURE(BM_Census, guadalupe, "ibmq_guadalupe")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Census, rigetti, "rigetti_16")->Unit(benchmark::kMillisecond);

void BM_EnumerateSycamore(benchmark::State& state) {
  const Architecture arch = bundled_architecture("sycamore_23");
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_connected(arch, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateSycamore)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_CanonicalKey(benchmark::State& state) {
  const Architecture arch = bundled_architecture("sycamore_23");
  const auto subsets = enumerate_connected(arch, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        canonical_key(induced_subgraph(arch.graph(), subsets[i++ % subsets.size()])));
  }
}
BENCHMARK(BM_CanonicalKey)->Arg(6)->Arg(13)->Arg(23);

void BM_Candidates(benchmark::State& state) {
  const Architecture arch = bundled_architecture("ibmq_guadalupe");
  for (auto _ : state) {
    benchmark::DoNotOptimize(candidates(arch, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Candidates)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_Cover(benchmark::State& state) {
  const Architecture arch = bundled_architecture("ibmq_guadalupe");
  const CandidateSet cand = candidates(arch, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cover(arch, cand, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Cover)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SOpt(benchmark::State& state) {
  const Circuit c{4, {{2, 3}, {2, 1}, {1, 0}, {3, 0}}};
  const Circuit long_circuit = repeat(c, static_cast<int>(state.range(0)));
  const Graph device = path_graph(8);
  for (auto _ : state) benchmark::DoNotOptimize(s_opt(long_circuit, device));
}
BENCHMARK(BM_SOpt)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace subarch

BENCHMARK_MAIN();
