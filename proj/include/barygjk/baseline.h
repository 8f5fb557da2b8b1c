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

#ifndef BARYGJK_BASELINE_H_
#define BARYGJK_BASELINE_H_

#include "barygjk/geometry.h"

// Reference answers computed without the support/simplex machinery. Slow by
// construction; use them for checking, never on the hot path.
namespace barygjk::baseline {

enum class ClosestFeature { kVertexVertex, kVertexEdge, kOverlap };

struct OracleReport {
  double distance = 0.0;
  ClosestFeature closest_feature = ClosestFeature::kOverlap;
};

// Separating axis test over all edge normals of both polygons. Projection
// intervals are closed, so shapes that only touch intersect.
bool SatIntersects(const ConvexPolygon& p, const ConvexPolygon& q);

// Smallest projection overlap over all edge-normal axes (unit normals).
// Negative when some axis separates the shapes.
double SatMinOverlap(const ConvexPolygon& p, const ConvexPolygon& q);

double PointSegmentDistance(Vec2 p, Vec2 a, Vec2 b);

// Exact for disjoint convex polygons: the minimum over all vertex-edge pairs
// in both directions. Zero whenever SatIntersects.
OracleReport OracleDistance(const ConvexPolygon& p, const ConvexPolygon& q);

// Builds P - Q explicitly as the hull of all n*m vertex differences and tests
// whether the origin lies in it (closed).
bool ExplicitCsoContainsOrigin(const ConvexPolygon& p, const ConvexPolygon& q);

}  // namespace barygjk::baseline

#endif  // BARYGJK_BASELINE_H_
