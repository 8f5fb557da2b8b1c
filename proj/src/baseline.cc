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

#include "barygjk/baseline.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "barygjk/predicates.h"

namespace barygjk::baseline {
namespace {

struct Interval {
  double lo;
  double hi;
};

Interval Project(const ConvexPolygon& poly, Vec2 axis) {
  Interval r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Vec2& v : poly.vertices()) {
    const double d = axis.x * v.x + axis.y * v.y;
    r.lo = std::min(r.lo, d);
    r.hi = std::max(r.hi, d);
  }
  return r;
}

// Calls fn(axis) for every outward edge normal of `poly`.
template <typename Fn>
void ForEachEdgeNormal(const ConvexPolygon& poly, Fn&& fn) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = poly[(i + 1) % n] - poly[i];
    fn(Vec2{e.y, -e.x});
  }
}

// Some edge of `edges` has every vertex of `other` strictly on its outer side.
bool ExactlySeparatedByEdge(const ConvexPolygon& edges, const ConvexPolygon& other) {
  const std::size_t n = edges.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = edges[i];
    const Vec2 b = edges[(i + 1) % n];
    bool all_outside = true;
    for (const Vec2& v : other.vertices()) {
      if (exact::Orient(a, b, v) >= 0) {
        all_outside = false;
        break;
      }
    }
    if (all_outside) return true;
  }
  return false;
}

}  // namespace

bool SatIntersects(const ConvexPolygon& p, const ConvexPolygon& q) {
  // Bound on the rounding error of one interval gap, including the error of
  // the edge normal itself.
  const double m = std::max(p.extent(), q.extent());
  const double tol = 128.0 * std::numeric_limits<double>::epsilon() * m * m;
  bool separated = false;
  double widest_gap = -std::numeric_limits<double>::infinity();
  auto test = [&](Vec2 axis) {
    if (separated) return;
    const Interval a = Project(p, axis);
    const Interval b = Project(q, axis);
    const double gap = std::max(b.lo - a.hi, a.lo - b.hi);
    if (gap > tol) separated = true;
    widest_gap = std::max(widest_gap, gap);
  };
  ForEachEdgeNormal(p, test);
  ForEachEdgeNormal(q, test);
  if (separated) return false;
  if (widest_gap < -tol) return true;
  // Contact within rounding: decide with exact orientation signs.
  return !ExactlySeparatedByEdge(p, q) && !ExactlySeparatedByEdge(q, p);
}

double SatMinOverlap(const ConvexPolygon& p, const ConvexPolygon& q) {
  double best = std::numeric_limits<double>::infinity();
  auto test = [&](Vec2 axis) {
    const double len = std::hypot(axis.x, axis.y);
    const Vec2 unit{axis.x / len, axis.y / len};
    const Interval a = Project(p, unit);
    const Interval b = Project(q, unit);
    best = std::min(best, std::min(a.hi, b.hi) - std::max(a.lo, b.lo));
  };
  ForEachEdgeNormal(p, test);
  ForEachEdgeNormal(q, test);
  return best;
}

double PointSegmentDistance(Vec2 p, Vec2 a, Vec2 b) {
  const double ex = b.x - a.x;
  const double ey = b.y - a.y;
  const double len2 = ex * ex + ey * ey;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x - a.x) * ex + (p.y - a.y) * ey) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  return std::hypot(p.x - (a.x + t * ex), p.y - (a.y + t * ey));
}

OracleReport OracleDistance(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (SatIntersects(p, q)) return {0.0, ClosestFeature::kOverlap};

  OracleReport best{std::numeric_limits<double>::infinity(), ClosestFeature::kVertexEdge};
  auto scan = [&best](const ConvexPolygon& verts, const ConvexPolygon& edges) {
    const std::size_t m = edges.size();
    for (const Vec2& v : verts.vertices()) {
      for (std::size_t j = 0; j < m; ++j) {
        const Vec2 a = edges[j];
        const Vec2 b = edges[(j + 1) % m];
        const double d = PointSegmentDistance(v, a, b);
        if (d < best.distance) {
          best.distance = d;
          const bool at_vertex = d == std::hypot(v.x - a.x, v.y - a.y) ||
                                 d == std::hypot(v.x - b.x, v.y - b.y);
          best.closest_feature =
              at_vertex ? ClosestFeature::kVertexVertex : ClosestFeature::kVertexEdge;
        }
      }
    }
  };
  // Scan order is symmetric in (p, q) so swapping the arguments gives the
  // identical minimum.
  // A gap below rounding can come out as 0 here; the feature still reports
  // that SAT found the pair disjoint.
  scan(p, q);
  scan(q, p);
  return best;
}

bool ExplicitCsoContainsOrigin(const ConvexPolygon& p, const ConvexPolygon& q) {
  std::vector<Vec2> diffs;
  diffs.reserve(p.size() * q.size());
  for (const Vec2& a : p.vertices()) {
    for (const Vec2& b : q.vertices()) diffs.push_back({a.x - b.x, a.y - b.y});
  }
  const std::vector<Vec2> hull = ConvexHull(std::move(diffs));
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = hull[i];
    const Vec2 b = hull[(i + 1) % n];
    // Origin must be left of (or on) every CCW edge.
    if ((b.x - a.x) * (-a.y) - (b.y - a.y) * (-a.x) < 0.0) return false;
  }
  return true;
}

}  // namespace barygjk::baseline
