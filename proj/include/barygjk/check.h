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

#ifndef BARYGJK_CHECK_H_
#define BARYGJK_CHECK_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "barygjk/datasets.h"
#include "barygjk/gjk.h"

namespace barygjk {

// Tolerances of the oracle comparison.
struct CheckTolerances {
  double distance_relative = 1e-7;
  double distance_absolute = 1e-9;
  // Pairs closer than this (oracle distance) or with SAT penetration below it
  // are knife-edge contacts: binary disagreements there are counted, not failed.
  double contact_band = 1e-9;
  double descent_slack = 1e-12;
};

struct RegimeCheck {
  int cases = 0;
  int distance_failures = 0;
  int binary_asserted = 0;
  int binary_failures = 0;
  // Binary disagreements inside the contact band (not failures).
  int binary_band_disagreements = 0;
  double worst_abs_error = 0.0;
};

struct CheckFailure {
  std::uint64_t seed = 0;
  std::size_t index = 0;
  Regime regime = Regime::kDistant;
  std::string what;
};

struct CheckReport {
  std::array<RegimeCheck, 3> regimes{};
  // SeparatingHyperplane exits on pairs SAT reports as intersecting.
  int separating_false_negatives = 0;
  // VerticalAngleEnclosure exits on pairs SAT reports as disjoint.
  int vertical_false_positives = 0;
  int work_bound_violations = 0;
  int descent_violations = 0;
  int max_iteration_exits = 0;
  std::vector<CheckFailure> failures;

  int total_cases() const;
  bool passed() const { return failures.empty(); }
  const RegimeCheck& of(Regime r) const { return regimes[static_cast<int>(r)]; }
};

// Runs distance and intersects on every case and compares them with the
// baseline oracles. The per-case work is spread over OpenMP threads unless
// `parallel` is false; the report is identical either way.
CheckReport CheckCases(std::span<const PairCase> cases, const QueryOptions& opts = {},
                       const CheckTolerances& tol = {}, bool parallel = true);

void PrintCheckReport(std::ostream& out, const CheckReport& report);

}  // namespace barygjk

#endif  // BARYGJK_CHECK_H_
