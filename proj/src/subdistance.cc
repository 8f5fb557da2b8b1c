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

#include "barygjk/subdistance.h"

#include <algorithm>
#include <cmath>

namespace barygjk {
namespace {

constexpr double kDegenerateSegment = 1e-12;
constexpr double kDegenerateTriangle = 1e-12;

inline bool SameSign(double m, double n) { return (m > 0.0) == (n > 0.0); }

SubdistanceResult VertexResult(const SimplexVertex& a) {
  return {Simplex::Of(a), a.w};
}

SubdistanceResult SegmentFallback(const SimplexVertex& a, const SimplexVertex& b,
                                  const SimplexVertex& c) {
  SubdistanceResult best = S1D(a, b);
  double best_norm = SquaredNorm(best.v);
  for (SubdistanceResult candidate : {S1D(b, c), S1D(c, a)}) {
    const double norm = SquaredNorm(candidate.v);
    if (norm < best_norm) {
      best = candidate;
      best_norm = norm;
    }
  }
  return best;
}

}  // namespace

Barycode ComputeBarycode(Vec2 a, Vec2 b, Vec2 c) {
  Barycode bc;
  bc.sigma_u = Cross(b, c);
  bc.sigma_v = Cross(c, a);
  bc.sigma_w = Cross(a, b);
  bc.sum = bc.sigma_u + bc.sigma_v + bc.sigma_w;
  bc.code = static_cast<int>(SameSign(bc.sum, bc.sigma_w)) |
            (static_cast<int>(SameSign(bc.sum, bc.sigma_v)) << 1) |
            (static_cast<int>(SameSign(bc.sum, bc.sigma_u)) << 2);
  const double scale = std::max({std::abs(bc.sigma_u), std::abs(bc.sigma_v),
                                 std::abs(bc.sigma_w), 1.0});
  bc.degenerate = std::abs(bc.sum) < kDegenerateTriangle * scale;
  return bc;
}

bool TriangleContainsOrigin(Vec2 a, Vec2 b, Vec2 c) {
  // Half-plane tests on each edge; the origin is inside when it sits strictly
  // on the same side of all three.
  const double ab = Cross(b - a, -a);
  const double bc = Cross(c - b, -b);
  const double ca = Cross(a - c, -c);
  return (ab > 0.0 && bc > 0.0 && ca > 0.0) || (ab < 0.0 && bc < 0.0 && ca < 0.0);
}

SubdistanceResult S1D(const SimplexVertex& a, const SimplexVertex& b) {
  const Vec2 ab = b.w - a.w;
  if (SquaredNorm(ab) < kDegenerateSegment * kDegenerateSegment) return VertexResult(a);

  // OA . AB >= 0: the origin is behind A.
  const double oa_ab = Dot(a.w, ab);
  if (oa_ab >= 0.0) return VertexResult(a);
  // OB . AB <= 0: the origin is beyond B.
  const double ob_ab = Dot(b.w, ab);
  if (ob_ab <= 0.0) return VertexResult(b);

  const double sum = oa_ab - ob_ab;
  SubdistanceResult r;
  r.simplex.verts[0] = a;
  r.simplex.verts[1] = b;
  r.simplex.lambdas[0] = -ob_ab / sum;
  r.simplex.lambdas[1] = oa_ab / sum;
  r.simplex.count = 2;
  r.v = r.simplex.lambdas[0] * a.w + r.simplex.lambdas[1] * b.w;
  return r;
}

SubdistanceResult ConeRegion(const SimplexVertex& a, const SimplexVertex& b,
                             const SimplexVertex& c, ConeVertex apex) {
  const SimplexVertex* v = &a;
  const SimplexVertex* m = &b;
  const SimplexVertex* n = &c;
  if (apex == ConeVertex::kB) {
    v = &b;
    m = &a;
  } else if (apex == ConeVertex::kC) {
    v = &c;
    m = &a;
    n = &b;
  }

  const Vec2 mv = v->w - m->w;
  const Vec2 nv = v->w - n->w;
  if (Dot(mv, nv) < 0.0) {
    // Obtuse apex: the origin may still project onto one of the two edges.
    if (Dot(v->w, mv) > 0.0) return S1D(*v, *m);
    if (Dot(v->w, nv) > 0.0) return S1D(*v, *n);
  }
  return VertexResult(*v);
}

SubdistanceResult S2D(const SimplexVertex& a, const SimplexVertex& b,
                      const SimplexVertex& c) {
  const Barycode bc = ComputeBarycode(a.w, b.w, c.w);
  if (bc.degenerate) return SegmentFallback(a, b, c);

  switch (bc.code) {
    case 1:
      return ConeRegion(a, b, c, ConeVertex::kC);
    case 2:
      return ConeRegion(a, b, c, ConeVertex::kB);
    case 3:
      return S1D(b, c);
    case 4:
      return ConeRegion(a, b, c, ConeVertex::kA);
    case 5:
      return S1D(a, c);
    case 6:
      return S1D(a, b);
    case 7: {
      SubdistanceResult r;
      const double lu = bc.sigma_u / bc.sum;
      const double lv = bc.sigma_v / bc.sum;
      const double lw = 1.0 - lu - lv;
      r.simplex.verts = {a, b, c};
      r.simplex.lambdas = {lu, lv, lw};
      r.simplex.count = 3;
      r.v = lu * a.w + lv * b.w + lw * c.w;
      return r;
    }
    default:
      // Unreachable for a non-degenerate sum: some sub-area shares its sign.
      return SegmentFallback(a, b, c);
  }
}

SubdistanceResult Subdistance(const Simplex& tau) {
  switch (tau.count) {
    case 3:
      return S2D(tau.verts[0], tau.verts[1], tau.verts[2]);
    case 2:
      return S1D(tau.verts[0], tau.verts[1]);
    default:
      return VertexResult(tau.verts[0]);
  }
}

}  // namespace barygjk
