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

#ifndef BARYGJK_GEOMETRY_H_
#define BARYGJK_GEOMETRY_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace barygjk {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

constexpr double Dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Scalar (z-component) cross product of two planar vectors.
constexpr double Cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

constexpr double SquaredNorm(Vec2 a) { return Dot(a, a); }
inline double Norm(Vec2 a) { return std::sqrt(SquaredNorm(a)); }

inline bool IsFinite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

// Rigid planar motion: rotate about the origin, then translate.
struct Transform2 {
  double rotation = 0.0;
  Vec2 translation;

  static Transform2 Identity() { return {}; }
};

struct PolygonError;

// Counter-clockwise, strictly convex vertex ring with at least three vertices.
// Only obtainable through ValidatePolygon (or the trusted transform path), so
// every instance satisfies the invariants.
class ConvexPolygon {
 public:
  std::span<const Vec2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec2& operator[](std::size_t i) const { return vertices_[i]; }

  // Mean of the vertices. Always lies inside the polygon.
  Vec2 VertexCentroid() const { return centroid_; }
  double SignedArea() const;
  // Largest absolute vertex coordinate; scales rounding-error bounds.
  double extent() const { return extent_; }

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  friend std::variant<ConvexPolygon, PolygonError> ValidatePolygon(
      std::vector<Vec2> vertices);
  friend ConvexPolygon ApplyTransform(const Transform2& t,
                                      const ConvexPolygon& poly);

  explicit ConvexPolygon(std::vector<Vec2> vertices);

  std::vector<Vec2> vertices_;
  Vec2 centroid_;
  double extent_ = 0.0;
};

struct PolygonError {
  enum class Kind {
    kFewerThanThreeVertices,
    kNotCounterClockwise,
    kNotStrictlyConvex,
    kNonFiniteCoordinate,
  };
  Kind kind;
  // Offending vertex for kNotStrictlyConvex / kNonFiniteCoordinate.
  std::size_t index = 0;

  std::string Message() const;
};

using PolygonOrError = std::variant<ConvexPolygon, PolygonError>;

PolygonOrError ValidatePolygon(std::vector<Vec2> vertices);

// Convenience for call sites with known-good input; throws std::invalid_argument
// carrying PolygonError::Message() otherwise.
ConvexPolygon MakePolygon(std::vector<Vec2> vertices);

Vec2 ApplyTransform(const Transform2& t, Vec2 p);
ConvexPolygon ApplyTransform(const Transform2& t, const ConvexPolygon& poly);

// Closed point-in-polygon test with an absolute slack on each edge line.
bool ContainsPoint(const ConvexPolygon& poly, Vec2 p, double slack = 0.0);

// Andrew's monotone chain. Returns the strictly convex hull in
// counter-clockwise order starting from the leftmost (then lowest) point; collinear
// and duplicate points are dropped.
std::vector<Vec2> ConvexHull(std::vector<Vec2> points);

}  // namespace barygjk

#endif  // BARYGJK_GEOMETRY_H_
