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

#include "barygjk/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "barygjk/baseline.h"
#include "barygjk/gjk.h"

namespace barygjk {
namespace {

template <typename T>
inline void Sink(const T& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

// Nearest-rank percentile of an unsorted sample.
double Percentile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
  return values[std::clamp<std::size_t>(rank, 1, values.size()) - 1];
}

QueryOptions OptionsFor(Algorithm a) {
  QueryOptions opts;
  opts.use_hill_climbing = a == Algorithm::kDistanceGjkHcs || a == Algorithm::kBinaryGjkHcs;
  return opts;
}

// One timed pass over `slice`; returns nanoseconds per call.
double TimePass(Algorithm a, const std::vector<const PairCase*>& slice) {
  const QueryOptions opts = OptionsFor(a);
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  switch (a) {
    case Algorithm::kDistanceGjk:
    case Algorithm::kDistanceGjkHcs: {
      double acc = 0.0;
      for (const PairCase* c : slice) {
        const DistanceResult r = Distance(c->p, c->q, opts);
        acc += r.distance + r.witness_p.x;
      }
      Sink(acc);
      break;
    }
    case Algorithm::kBinaryGjk:
    case Algorithm::kBinaryGjkHcs: {
      int hits = 0;
      for (const PairCase* c : slice) hits += Intersects(c->p, c->q, opts).colliding;
      Sink(hits);
      break;
    }
    case Algorithm::kSat: {
      int hits = 0;
      for (const PairCase* c : slice) hits += baseline::SatIntersects(c->p, c->q);
      Sink(hits);
      break;
    }
  }
  const auto elapsed = std::chrono::duration<double, std::nano>(Clock::now() - start).count();
  return elapsed / static_cast<double>(slice.size());
}

void CountWork(Algorithm a, const std::vector<const PairCase*>& slice, BenchRecord& rec) {
  const QueryOptions opts = OptionsFor(a);
  double iterations = 0.0;
  double calls = 0.0;
  for (const PairCase* c : slice) {
    if (a == Algorithm::kDistanceGjk || a == Algorithm::kDistanceGjkHcs) {
      const DistanceResult r = Distance(c->p, c->q, opts);
      iterations += r.iterations;
      calls += r.support_calls;
    } else if (a == Algorithm::kBinaryGjk || a == Algorithm::kBinaryGjkHcs) {
      const CollisionResult r = Intersects(c->p, c->q, opts);
      iterations += r.iterations;
      calls += r.support_calls;
    }
  }
  const auto n = static_cast<double>(slice.size());
  rec.mean_iterations = iterations / n;
  rec.mean_support_calls = calls / n;
}

}  // namespace

std::string_view ToString(Algorithm a) {
  switch (a) {
    case Algorithm::kDistanceGjk:
      return "DistanceGjk";
    case Algorithm::kDistanceGjkHcs:
      return "DistanceGjkHcs";
    case Algorithm::kBinaryGjk:
      return "BinaryGjk";
    case Algorithm::kBinaryGjkHcs:
      return "BinaryGjkHcs";
    case Algorithm::kSat:
      return "Sat";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (ToString(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm \"" + std::string(name) + "\"");
}

std::vector<BenchRecord> RunBenchmark(const Dataset& dataset, std::span<const Algorithm> algorithms,
                                      const BenchOptions& opts) {
  std::vector<Algorithm> algos(algorithms.begin(), algorithms.end());
  std::sort(algos.begin(), algos.end());
  algos.erase(std::unique(algos.begin(), algos.end()), algos.end());
  const int passes = std::max(opts.repetitions, 20);

  std::vector<BenchRecord> records;
  for (Algorithm a : algos) {
    for (Regime regime : kAllRegimes) {
      std::vector<const PairCase*> slice;
      for (const PairCase& c : dataset.cases) {
        if (c.regime == regime) slice.push_back(&c);
      }
      if (slice.empty()) continue;

      for (int i = 0; i < opts.warmup_passes; ++i) TimePass(a, slice);
      std::vector<double> per_call;
      per_call.reserve(static_cast<std::size_t>(passes));
      for (int i = 0; i < passes; ++i) per_call.push_back(TimePass(a, slice));

      BenchRecord rec{a, regime, dataset.spec.vertex_count};
      double total = 0.0;
      for (double t : per_call) total += t;
      rec.mean_ns = total / static_cast<double>(per_call.size());
      rec.p50_ns = Percentile(per_call, 0.50);
      rec.p99_ns = Percentile(per_call, 0.99);
      CountWork(a, slice, rec);
      records.push_back(rec);
    }
  }
  return records;
}

void WriteBenchCsv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kBenchCsvHeader << "\n";
  for (const BenchRecord& r : records) {
    out << ToString(r.algorithm) << ',' << ToString(r.regime) << ',' << r.vertex_count << ','
        << r.mean_ns << ',' << r.p50_ns << ',' << r.p99_ns << ',' << r.mean_iterations << ','
        << r.mean_support_calls << "\n";
  }
}

std::string GnuplotScript(std::string_view csv_path) {
  std::ostringstream s;
  s << "# usage: gnuplot -p this_script\n"
    << "set datafile separator ','\n"
    << "set style data histograms\n"
    << "set style fill solid 0.8 border -1\n"
    << "set key outside right top\n"
    << "set ylabel 'mean time per call (ns)'\n"
    << "set xtics rotate by -30\n"
    << "set title 'narrow-phase timings by algorithm and regime'\n"
    << "plot '" << csv_path
    << "' every ::1 using 4:xticlabels(stringcolumn(1).'/'.stringcolumn(2)) title 'mean_ns', \\\n"
    << "     '' every ::1 using 6 title 'p99_ns'\n";
  return s.str();
}

}  // namespace barygjk
