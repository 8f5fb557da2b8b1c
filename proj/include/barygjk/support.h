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

#ifndef BARYGJK_SUPPORT_H_
#define BARYGJK_SUPPORT_H_

#include <cstdint>
#include <optional>

#include "barygjk/geometry.h"

namespace barygjk {

struct SupportResult {
  Vec2 point;
  std::uint32_t index = 0;
};

// One point of the Minkowski difference P - Q together with the polygon
// vertices it came from.
struct SimplexVertex {
  Vec2 w;  // p - q
  Vec2 p;
  Vec2 q;
  std::uint32_t ip = 0;
  std::uint32_t iq = 0;
};

// Vertex indices of the previous support points, used to warm-start the
// hill-climbing search.
struct WarmStart {
  std::uint32_t ip = 0;
  std::uint32_t iq = 0;
};

// Linear scan; the lowest index attaining the maximum wins ties. A zero
// direction therefore selects vertex 0.
SupportResult SupportBrute(const ConvexPolygon& poly, Vec2 dir);

// Walks the vertex ring from `start` while a neighbour is strictly better.
// Returns a vertex with the same support value as SupportBrute.
SupportResult SupportHillClimb(const ConvexPolygon& poly, Vec2 dir, std::uint32_t start);

// Support of P - Q in `dir`: support of P in dir minus support of Q in -dir.
// Hill-climbs from `warm` when given, scans otherwise.
SimplexVertex CsoSupport(const ConvexPolygon& p, const ConvexPolygon& q, Vec2 dir,
                         std::optional<WarmStart> warm = std::nullopt);

// Starting direction for the GJK loops: a point of P - Q that is cheap to
// compute (difference of vertex centroids), with fallbacks when it vanishes.
Vec2 InitialDirection(const ConvexPolygon& p, const ConvexPolygon& q);

}  // namespace barygjk

#endif  // BARYGJK_SUPPORT_H_
