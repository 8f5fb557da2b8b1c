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

#ifndef BARYGJK_BATCH_H_
#define BARYGJK_BATCH_H_

#include <cstdint>
#include <span>
#include <vector>

#include "barygjk/baseline.h"
#include "barygjk/datasets.h"
#include "barygjk/gjk.h"

// Whole-dataset kernels. Each query is independent, so the parallel versions
// split the case range across OpenMP threads; the *Serial versions are the
// single-threaded reference the parallel results must match bit for bit.
namespace barygjk::batch {

std::vector<DistanceResult> Distances(std::span<const PairCase> cases, const QueryOptions& opts);
std::vector<DistanceResult> DistancesSerial(std::span<const PairCase> cases,
                                            const QueryOptions& opts);

std::vector<CollisionResult> Collisions(std::span<const PairCase> cases, const QueryOptions& opts);
std::vector<CollisionResult> CollisionsSerial(std::span<const PairCase> cases,
                                              const QueryOptions& opts);

std::vector<baseline::OracleReport> Oracles(std::span<const PairCase> cases);
std::vector<baseline::OracleReport> OraclesSerial(std::span<const PairCase> cases);

// 1 where SatIntersects holds.
std::vector<std::uint8_t> SatResults(std::span<const PairCase> cases);
std::vector<std::uint8_t> SatResultsSerial(std::span<const PairCase> cases);

// Threads OpenMP will use for the parallel kernels (1 without OpenMP).
int MaxThreads();

}  // namespace barygjk::batch

#endif  // BARYGJK_BATCH_H_
