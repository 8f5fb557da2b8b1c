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

#ifndef BARYGJK_GJK_H_
#define BARYGJK_GJK_H_

#include <string_view>
#include <utility>
#include <vector>

#include "barygjk/geometry.h"
#include "barygjk/subdistance.h"

namespace barygjk {

struct QueryOptions {
  // Relative tolerance of the convergence test, and absolute tolerance on
  // |v| for the enclosure test.
  double epsilon = 1e-10;
  int max_iterations = 64;
  bool use_hill_climbing = true;
};

enum class Termination { kConverged, kSimplexFull, kContainsOrigin, kMaxIterations };

struct DistanceResult {
  // Zero for kSimplexFull and kContainsOrigin, |separating_vector| otherwise.
  double distance = 0.0;
  Vec2 witness_p;
  Vec2 witness_q;
  // Closest point of P - Q to the origin; equals witness_p - witness_q.
  Vec2 separating_vector;
  int iterations = 0;
  int support_calls = 0;
  Termination termination = Termination::kConverged;
  Simplex simplex;
};

enum class CollisionExit {
  kSeparatingHyperplane,
  kVerticalAngleEnclosure,
  kSubdistanceEnclosure,
  kConverged,
  kMaxIterations,
};

struct CollisionResult {
  bool colliding = false;
  int iterations = 0;
  int support_calls = 0;
  CollisionExit exit = CollisionExit::kConverged;
};

// |v_k| after every subdistance step of a distance query, starting with |v_1|.
struct DistanceTrace {
  std::vector<double> norms;
};

DistanceResult Distance(const ConvexPolygon& p, const ConvexPolygon& q,
                        const QueryOptions& opts = {});

// Same query, additionally recording the norm sequence into `trace`.
DistanceResult Distance(const ConvexPolygon& p, const ConvexPolygon& q,
                        const QueryOptions& opts, DistanceTrace& trace);

// Boolean intersection test with the separating-hyperplane and vertical-angle
// early exits. Both exits are taken only when their sign tests are certain;
// near contact they are re-decided with exact predicates, so neither can
// contradict an exact separating-axis test. Pairs reaching the other exits
// are colliding when |v| <= epsilon.
CollisionResult Intersects(const ConvexPolygon& p, const ConvexPolygon& q,
                           const QueryOptions& opts = {});

// (sum lambda_i p_i, sum lambda_i q_i) over a solved simplex.
std::pair<Vec2, Vec2> WitnessPoints(const Simplex& simplex);

// distance <= 1e-9: touching or overlapping.
inline bool IsTouchingOrOverlapping(const DistanceResult& r) { return r.distance <= 1e-9; }

std::string_view ToString(Termination t);
std::string_view ToString(CollisionExit e);

}  // namespace barygjk

#endif  // BARYGJK_GJK_H_
