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

#ifndef BARYGJK_BENCH_H_
#define BARYGJK_BENCH_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "barygjk/datasets.h"

namespace barygjk {

enum class Algorithm { kDistanceGjk, kDistanceGjkHcs, kBinaryGjk, kBinaryGjkHcs, kSat };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kDistanceGjk, Algorithm::kDistanceGjkHcs,
                                               Algorithm::kBinaryGjk, Algorithm::kBinaryGjkHcs,
                                               Algorithm::kSat};

std::string_view ToString(Algorithm a);
// Throws std::invalid_argument on unknown names.
Algorithm ParseAlgorithm(std::string_view name);

struct BenchRecord {
  Algorithm algorithm;
  Regime regime;
  int vertex_count = 0;
  double mean_ns = 0.0;
  double p50_ns = 0.0;
  double p99_ns = 0.0;
  double mean_iterations = 0.0;
  double mean_support_calls = 0.0;
};

struct BenchOptions {
  int warmup_passes = 5;
  int repetitions = 20;  // measured passes; at least 20 are always run
};

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,regime,vertex_count,mean_ns,p50_ns,p99_ns,mean_iterations,mean_support_calls";

// Single-threaded timing of every (algorithm, regime) cell present in the
// dataset. Each pass times one loop over the whole regime slice; per-call
// time is the pass time divided by the slice size. mean/p50/p99 summarize the
// per-pass values. Rows come back sorted by algorithm, then regime.
std::vector<BenchRecord> RunBenchmark(const Dataset& dataset, std::span<const Algorithm> algorithms,
                                      const BenchOptions& opts = {});

void WriteBenchCsv(std::ostream& out, std::span<const BenchRecord> records);

// gnuplot script that plots mean_ns per algorithm from `csv_path`.
std::string GnuplotScript(std::string_view csv_path);

}  // namespace barygjk

#endif  // BARYGJK_BENCH_H_
