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

#include "barygjk/batch.h"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace barygjk::batch {
namespace {

template <typename Result, typename Fn>
std::vector<Result> ParallelMap(std::span<const PairCase> cases, Fn fn) {
  std::vector<Result> out(cases.size());
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(cases[i]);
  return out;
}

template <typename Result, typename Fn>
std::vector<Result> SerialMap(std::span<const PairCase> cases, Fn fn) {
  std::vector<Result> out;
  out.reserve(cases.size());
  for (const PairCase& c : cases) out.push_back(fn(c));
  return out;
}

}  // namespace

std::vector<DistanceResult> Distances(std::span<const PairCase> cases, const QueryOptions& opts) {
  return ParallelMap<DistanceResult>(cases,
                                     [&](const PairCase& c) { return Distance(c.p, c.q, opts); });
}

std::vector<DistanceResult> DistancesSerial(std::span<const PairCase> cases,
                                            const QueryOptions& opts) {
  return SerialMap<DistanceResult>(cases,
                                   [&](const PairCase& c) { return Distance(c.p, c.q, opts); });
}

std::vector<CollisionResult> Collisions(std::span<const PairCase> cases, const QueryOptions& opts) {
  return ParallelMap<CollisionResult>(
      cases, [&](const PairCase& c) { return Intersects(c.p, c.q, opts); });
}

std::vector<CollisionResult> CollisionsSerial(std::span<const PairCase> cases,
                                              const QueryOptions& opts) {
  return SerialMap<CollisionResult>(cases,
                                    [&](const PairCase& c) { return Intersects(c.p, c.q, opts); });
}

std::vector<baseline::OracleReport> Oracles(std::span<const PairCase> cases) {
  return ParallelMap<baseline::OracleReport>(
      cases, [](const PairCase& c) { return baseline::OracleDistance(c.p, c.q); });
}

std::vector<baseline::OracleReport> OraclesSerial(std::span<const PairCase> cases) {
  return SerialMap<baseline::OracleReport>(
      cases, [](const PairCase& c) { return baseline::OracleDistance(c.p, c.q); });
}

std::vector<std::uint8_t> SatResults(std::span<const PairCase> cases) {
  return ParallelMap<std::uint8_t>(cases, [](const PairCase& c) {
    return static_cast<std::uint8_t>(baseline::SatIntersects(c.p, c.q));
  });
}

std::vector<std::uint8_t> SatResultsSerial(std::span<const PairCase> cases) {
  return SerialMap<std::uint8_t>(cases, [](const PairCase& c) {
    return static_cast<std::uint8_t>(baseline::SatIntersects(c.p, c.q));
  });
}

int MaxThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace barygjk::batch
