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

#include "barygjk/support.h"

namespace barygjk {

SupportResult SupportBrute(const ConvexPolygon& poly, Vec2 dir) {
  const auto verts = poly.vertices();
  std::uint32_t best = 0;
  double best_value = Dot(verts[0], dir);
  for (std::uint32_t i = 1; i < verts.size(); ++i) {
    const double value = Dot(verts[i], dir);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  return {verts[best], best};
}

SupportResult SupportHillClimb(const ConvexPolygon& poly, Vec2 dir, std::uint32_t start) {
  const auto verts = poly.vertices();
  const auto n = static_cast<std::uint32_t>(verts.size());
  std::uint32_t i = start;
  double value = Dot(verts[i], dir);

  std::uint32_t next = i + 1 == n ? 0 : i + 1;
  double next_value = Dot(verts[next], dir);
  if (next_value > value) {
    // Walk forward. At most n - 1 steps on a strictly convex ring.
    do {
      i = next;
      value = next_value;
      next = i + 1 == n ? 0 : i + 1;
      next_value = Dot(verts[next], dir);
    } while (next_value > value);
    return {verts[i], i};
  }

  std::uint32_t prev = i == 0 ? n - 1 : i - 1;
  double prev_value = Dot(verts[prev], dir);
  while (prev_value > value) {
    i = prev;
    value = prev_value;
    prev = i == 0 ? n - 1 : i - 1;
    prev_value = Dot(verts[prev], dir);
  }
  return {verts[i], i};
}

SimplexVertex CsoSupport(const ConvexPolygon& p, const ConvexPolygon& q, Vec2 dir,
                         std::optional<WarmStart> warm) {
  SupportResult sp;
  SupportResult sq;
  if (warm) {
    sp = SupportHillClimb(p, dir, warm->ip);
    sq = SupportHillClimb(q, -dir, warm->iq);
  } else {
    sp = SupportBrute(p, dir);
    sq = SupportBrute(q, -dir);
  }
  return {sp.point - sq.point, sp.point, sq.point, sp.index, sq.index};
}

Vec2 InitialDirection(const ConvexPolygon& p, const ConvexPolygon& q) {
  constexpr double kTiny = 1e-12;
  const Vec2 centroids = p.VertexCentroid() - q.VertexCentroid();
  if (Norm(centroids) >= kTiny) return centroids;
  const Vec2 firsts = p[0] - q[0];
  if (Norm(firsts) >= kTiny) return firsts;
  return {1.0, 0.0};
}

}  // namespace barygjk
