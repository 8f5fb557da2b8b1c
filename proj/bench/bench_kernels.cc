// Copyright 2026 The BaryGJK Authors
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

// Serial reference kernels against their OpenMP counterparts, plus the
// single-query algorithms on one regime slice.

#include <benchmark/benchmark.h>

#include <map>

#include "barygjk/baseline.h"
#include "barygjk/batch.h"
#include "barygjk/check.h"
#include "barygjk/datasets.h"
#include "barygjk/gjk.h"

namespace barygjk {
namespace {

const Dataset& DatasetFor(int vertices) {
  static std::map<int, Dataset> cache;
  auto it = cache.find(vertices);
  if (it == cache.end()) it = cache.emplace(vertices, GenerateDataset({vertices, 1000, 7})).first;
  return it->second;
}

template <auto Kernel>
void BM_Distances(benchmark::State& state) {
  const Dataset& d = DatasetFor(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(d.cases, QueryOptions{}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.cases.size()));
}
BENCHMARK(BM_Distances<batch::DistancesSerial>)->Name("Distances/serial")->Arg(8)->Arg(24);
BENCHMARK(BM_Distances<batch::Distances>)->Name("Distances/openmp")->Arg(8)->Arg(24);

template <auto Kernel>
void BM_Oracles(benchmark::State& state) {
  const Dataset& d = DatasetFor(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(d.cases));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.cases.size()));
}
BENCHMARK(BM_Oracles<batch::OraclesSerial>)->Name("Oracles/serial")->Arg(8)->Arg(24);
BENCHMARK(BM_Oracles<batch::Oracles>)->Name("Oracles/openmp")->Arg(8)->Arg(24);

void BM_Check(benchmark::State& state) {
  const Dataset& d = DatasetFor(16);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(CheckCases(d.cases, {}, {}, parallel).passed());
}
BENCHMARK(BM_Check)->ArgName("parallel")->Arg(0)->Arg(1);

void BM_Generate(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    const DatasetSpec spec{12, 200, 3};
    benchmark::DoNotOptimize(parallel ? GenerateDataset(spec) : GenerateDatasetSerial(spec));
  }
}
BENCHMARK(BM_Generate)->ArgName("parallel")->Arg(0)->Arg(1);

// Single queries on the overlap slice of the 16-gon dataset.
const PairCase& OverlapCase(std::size_t i) {
  const Dataset& d = DatasetFor(16);
  const std::size_t per = static_cast<std::size_t>(d.spec.cases_per_regime);
  return d.cases[2 * per + i % per];
}

void BM_QueryIntersects(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    const PairCase& c = OverlapCase(i++);
    benchmark::DoNotOptimize(Intersects(c.p, c.q).colliding);
  }
}
BENCHMARK(BM_QueryIntersects);

void BM_QuerySat(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    const PairCase& c = OverlapCase(i++);
    benchmark::DoNotOptimize(baseline::SatIntersects(c.p, c.q));
  }
}
BENCHMARK(BM_QuerySat);

}  // namespace
}  // namespace barygjk

BENCHMARK_MAIN();
