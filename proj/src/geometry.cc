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

#include "barygjk/geometry.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace barygjk {

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  Vec2 sum;
  for (const Vec2& v : vertices_) {
    sum = sum + v;
    extent_ = std::max({extent_, std::abs(v.x), std::abs(v.y)});
  }
  centroid_ = (1.0 / static_cast<double>(vertices_.size())) * sum;
}

double ConvexPolygon::SignedArea() const {
  double twice = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    twice += Cross(vertices_[i], vertices_[(i + 1) % n]);
  }
  return 0.5 * twice;
}

std::string PolygonError::Message() const {
  switch (kind) {
    case Kind::kFewerThanThreeVertices:
      return "polygon needs at least three vertices";
    case Kind::kNotCounterClockwise:
      return "polygon vertices are not counter-clockwise";
    case Kind::kNotStrictlyConvex:
      return "polygon is not strictly convex at vertex " + std::to_string(index);
    case Kind::kNonFiniteCoordinate:
      return "non-finite coordinate at vertex " + std::to_string(index);
  }
  return "invalid polygon";
}

PolygonOrError ValidatePolygon(std::vector<Vec2> vertices) {
  using Kind = PolygonError::Kind;
  const std::size_t n = vertices.size();
  if (n < 3) return PolygonError{Kind::kFewerThanThreeVertices};
  for (std::size_t i = 0; i < n; ++i) {
    if (!IsFinite(vertices[i])) return PolygonError{Kind::kNonFiniteCoordinate, i};
  }

  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    twice_area += Cross(vertices[i], vertices[(i + 1) % n]);
  }
  if (!(twice_area > 0.0)) return PolygonError{Kind::kNotCounterClockwise};

  // The turn at vertex i uses its two neighbours.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 prev = vertices[(i + n - 1) % n];
    const Vec2 next = vertices[(i + 1) % n];
    if (!(Cross(vertices[i] - prev, next - vertices[i]) > 0.0)) {
      return PolygonError{Kind::kNotStrictlyConvex, i};
    }
  }
  // Positive turns everywhere still admit a star that winds twice.
  if (n > 3) {
    double winding = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 a = vertices[(i + 1) % n] - vertices[i];
      const Vec2 b = vertices[(i + 2) % n] - vertices[(i + 1) % n];
      winding += std::atan2(Cross(a, b), Dot(a, b));
    }
    if (winding > 2.0 * 3.14159265358979323846 + 1e-6) {
      return PolygonError{Kind::kNotStrictlyConvex, 0};
    }
  }
  return ConvexPolygon(std::move(vertices));
}

ConvexPolygon MakePolygon(std::vector<Vec2> vertices) {
  PolygonOrError result = ValidatePolygon(std::move(vertices));
  if (auto* err = std::get_if<PolygonError>(&result)) {
    throw std::invalid_argument(err->Message());
  }
  return std::get<ConvexPolygon>(std::move(result));
}

Vec2 ApplyTransform(const Transform2& t, Vec2 p) {
  const double c = std::cos(t.rotation);
  const double s = std::sin(t.rotation);
  return {c * p.x - s * p.y + t.translation.x, s * p.x + c * p.y + t.translation.y};
}

ConvexPolygon ApplyTransform(const Transform2& t, const ConvexPolygon& poly) {
  const double c = std::cos(t.rotation);
  const double s = std::sin(t.rotation);
  std::vector<Vec2> out;
  out.reserve(poly.size());
  for (const Vec2& p : poly.vertices()) {
    out.push_back({c * p.x - s * p.y + t.translation.x,
                   s * p.x + c * p.y + t.translation.y});
  }
  return ConvexPolygon(std::move(out));
}

bool ContainsPoint(const ConvexPolygon& poly, Vec2 p, double slack) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i];
    const Vec2 edge = poly[(i + 1) % n] - a;
    // Signed distance of p to the left of the edge line.
    const double side = Cross(edge, p - a) / Norm(edge);
    if (side < -slack) return false;
  }
  return true;
}

std::vector<Vec2> ConvexHull(std::vector<Vec2> points) {
  std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<Vec2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Vec2& p : points) {
    while (k >= 2 && Cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = points.size() - 1; i-- > 0;) {
    while (k >= lower && Cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace barygjk
