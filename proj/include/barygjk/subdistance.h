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

#ifndef BARYGJK_SUBDISTANCE_H_
#define BARYGJK_SUBDISTANCE_H_

#include <array>
#include <cstdint>

#include "barygjk/geometry.h"
#include "barygjk/support.h"

namespace barygjk {

// Up to three Minkowski-difference points with the barycentric weights of the
// point closest to the origin on their convex hull.
struct Simplex {
  std::array<SimplexVertex, 3> verts{};
  std::array<double, 3> lambdas{};
  std::uint8_t count = 0;

  static Simplex Of(const SimplexVertex& a) {
    Simplex s;
    s.verts[0] = a;
    s.lambdas[0] = 1.0;
    s.count = 1;
    return s;
  }

  // Sum of lambda_i * w_i.
  Vec2 ClosestPoint() const {
    Vec2 v;
    for (std::uint8_t i = 0; i < count; ++i) v = v + lambdas[i] * verts[i].w;
    return v;
  }
};

struct SubdistanceResult {
  Simplex simplex;
  Vec2 v;  // minimum-norm point of the simplex hull
};

// Region of the plane containing the origin relative to triangle (A, B, C).
// Bit 2 / 1 / 0 is set when the barycentric coordinate for A / B / C has the
// same strict positivity as the total signed area. 7 means inside; 1, 2, 4 are
// the vertex cones of C, B, A; 3, 5, 6 are the edge regions of BC, AC, AB.
struct Barycode {
  int code = 0;
  double sigma_u = 0.0;  // B x C
  double sigma_v = 0.0;  // C x A
  double sigma_w = 0.0;  // A x B
  double sum = 0.0;
  // |sum| is negligible next to the sub-areas: A, B, C are collinear and
  // `code` must not be used.
  bool degenerate = false;
};

Barycode ComputeBarycode(Vec2 a, Vec2 b, Vec2 c);

// True when the origin lies strictly inside triangle (a, b, c), either orientation.
bool TriangleContainsOrigin(Vec2 a, Vec2 b, Vec2 c);

// Closest point of segment AB to the origin.
SubdistanceResult S1D(const SimplexVertex& a, const SimplexVertex& b);

// Closest point of triangle ABC to the origin, dispatched on the barycode.
SubdistanceResult S2D(const SimplexVertex& a, const SimplexVertex& b,
                      const SimplexVertex& c);

// Which triangle vertex owns the cone containing the origin.
enum class ConeVertex : std::uint8_t { kA, kB, kC };

// Resolves an origin lying in the cone region of one vertex. The remaining
// two vertices keep their relative order.
SubdistanceResult ConeRegion(const SimplexVertex& a, const SimplexVertex& b,
                             const SimplexVertex& c, ConeVertex apex);

// Dispatch on simplex cardinality (1, 2 or 3). Lambdas of the input are ignored.
SubdistanceResult Subdistance(const Simplex& tau);

}  // namespace barygjk

#endif  // BARYGJK_SUBDISTANCE_H_
