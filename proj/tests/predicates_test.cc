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

#include "barygjk/predicates.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "barygjk/baseline.h"
#include "barygjk/gjk.h"
#include "test_oracles.h"

namespace barygjk::exact {
namespace {

using Int = __int128;

int SignOf(Int x) { return (x > 0) - (x < 0); }

// Integer grid points scaled by a power of two: the doubles are exact and
// the integer determinant is an independent exact oracle.
struct GridPoint {
  std::int64_t x;
  std::int64_t y;
  Vec2 AsVec() const { return {std::ldexp(double(x), -30), std::ldexp(double(y), -30)}; }
};

int IntOrient(GridPoint a, GridPoint b, GridPoint c) {
  return SignOf(Int(b.x - a.x) * (c.y - a.y) - Int(b.y - a.y) * (c.x - a.x));
}

TEST(OrientTest, SimpleCases) {
  EXPECT_EQ(Orient({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(Orient({0, 0}, {1, 0}, {0, -1}), -1);
  EXPECT_EQ(Orient({0, 0}, {1, 1}, {3, 3}), 0);
}

TEST(OrientTest, ResolvesSignBelowDoubleRounding) {
  const Vec2 a{0.1, 0.1};
  const Vec2 b{0.3, 0.3};
  const Vec2 c{0.5, std::nextafter(0.5, 1.0)};
  EXPECT_EQ(Orient(a, b, c), 1);
  EXPECT_EQ(Orient(a, b, {0.5, std::nextafter(0.5, 0.0)}), -1);
}

TEST(OrientTest, MatchesIntegerOracleNearCollinear) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-(std::int64_t{1} << 45),
                                                     std::int64_t{1} << 45);
  std::uniform_int_distribution<std::int64_t> jitter(-3, 3);
  std::uniform_real_distribution<double> t(-2, 2);
  int nonzero = 0;
  for (int i = 0; i < 20000; ++i) {
    const GridPoint a{coord(rng), coord(rng)};
    const GridPoint b{coord(rng), coord(rng)};
    const double s = t(rng);
    const GridPoint c{a.x + std::llround(s * double(b.x - a.x)) + jitter(rng),
                      a.y + std::llround(s * double(b.y - a.y)) + jitter(rng)};
    const int expected = IntOrient(a, b, c);
    nonzero += expected != 0;
    ASSERT_EQ(Orient(a.AsVec(), b.AsVec(), c.AsVec()), expected) << i;
  }
  EXPECT_GT(nonzero, 10000);
}

TEST(CrossOfDifferencesTest, MatchesIntegerOracle) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> coord(-(std::int64_t{1} << 40),
                                                     std::int64_t{1} << 40);
  std::uniform_int_distribution<std::int64_t> jitter(-2, 2);
  for (int i = 0; i < 20000; ++i) {
    const GridPoint pa{coord(rng), coord(rng)};
    const GridPoint qa{coord(rng), coord(rng)};
    const GridPoint qb{coord(rng), coord(rng)};
    // pb chosen so pb - qb is nearly parallel to pa - qa.
    const GridPoint pb{qb.x + (pa.x - qa.x) / 3 + jitter(rng), qb.y + (pa.y - qa.y) / 3 + jitter(rng)};
    const Int ax = pa.x - qa.x;
    const Int ay = pa.y - qa.y;
    const Int bx = pb.x - qb.x;
    const Int by = pb.y - qb.y;
    ASSERT_EQ(CrossOfDifferences(pa.AsVec(), qa.AsVec(), pb.AsVec(), qb.AsVec()),
              SignOf(ax * by - ay * bx))
        << i;
  }
}

TEST(DotOfDifferenceTest, MatchesIntegerOracle) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> coord(-(std::int64_t{1} << 45),
                                                     std::int64_t{1} << 45);
  std::uniform_int_distribution<std::int64_t> jitter(-2, 2);
  for (int i = 0; i < 20000; ++i) {
    const GridPoint v{coord(rng) >> 20, coord(rng) >> 20};
    const GridPoint q{coord(rng), coord(rng)};
    // p - q nearly orthogonal to v.
    const GridPoint p{q.x - v.y * 7 + jitter(rng), q.y + v.x * 7 + jitter(rng)};
    const Int expected = Int(v.x) * (p.x - q.x) + Int(v.y) * (p.y - q.y);
    ASSERT_EQ(DotOfDifference(v.AsVec(), p.AsVec(), q.AsVec()), SignOf(expected)) << i;
  }
}

TEST(KnifeEdgeTest, SatDecidesOneUlpGapsExactly) {
  const ConvexPolygon p = testing::UnitSquare();
  EXPECT_TRUE(baseline::SatIntersects(p, testing::UnitSquare({1.0, 0.3})));
  EXPECT_FALSE(baseline::SatIntersects(p, testing::UnitSquare({std::nextafter(1.0, 2.0), 0.3})));
  EXPECT_TRUE(baseline::SatIntersects(p, testing::UnitSquare({std::nextafter(1.0, 0.0), 0.3})));
}

TEST(KnifeEdgeTest, BinaryExitsAgreeWithExactSatOnOneUlpGaps) {
  const ConvexPolygon p = testing::RegularPolygon(9, 1.0);
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int i = 0; i < 2000; ++i) {
    const double th = angle(rng);
    const Vec2 dir{std::cos(th), std::sin(th)};
    // Probe near contact: coarse bisection on the offset along dir.
    double lo = 0.0;
    double hi = 4.0;
    for (int k = 0; k < 200; ++k) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      const ConvexPolygon q = ApplyTransform(Transform2{0.3, mid * dir}, testing::RegularPolygon(5));
      (baseline::SatIntersects(p, q) ? lo : hi) = mid;
    }
    for (double offset : {lo, hi}) {
      const ConvexPolygon q =
          ApplyTransform(Transform2{0.3, offset * dir}, testing::RegularPolygon(5));
      const bool sat = baseline::SatIntersects(p, q);
      const CollisionResult r = Intersects(p, q);
      if (r.exit == CollisionExit::kSeparatingHyperplane) {
        ASSERT_FALSE(sat) << i;
      }
      if (r.exit == CollisionExit::kVerticalAngleEnclosure) {
        ASSERT_TRUE(sat) << i;
      }
    }
  }
}

}  // namespace
}  // namespace barygjk::exact
