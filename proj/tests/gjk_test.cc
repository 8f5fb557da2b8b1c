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

#include "barygjk/gjk.h"

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "barygjk/baseline.h"
#include "barygjk/datasets.h"
#include "test_oracles.h"

namespace barygjk {
namespace {

using testing::UnitSquare;

bool Enclosed(Termination t) {
  return t == Termination::kContainsOrigin || t == Termination::kSimplexFull;
}

const Dataset& MixedDataset(int vertices) {
  static std::map<int, Dataset> cache;
  auto it = cache.find(vertices);
  if (it == cache.end()) {
    it = cache.emplace(vertices, GenerateDataset({vertices, 200, 1234})).first;
  }
  return it->second;
}

TEST(DistanceTest, AxisAlignedGap) {
  const DistanceResult r = Distance(UnitSquare(), UnitSquare({3, 0}));
  EXPECT_NEAR(r.distance, 2.0, 1e-15);
  EXPECT_EQ(r.termination, Termination::kConverged);
  EXPECT_DOUBLE_EQ(r.witness_p.x, 1.0);
  EXPECT_DOUBLE_EQ(r.witness_q.x, 3.0);
  EXPECT_NEAR(r.witness_p.y, r.witness_q.y, 1e-15);
  EXPECT_GE(r.witness_p.y, 0.0);
  EXPECT_LE(r.witness_p.y, 1.0);
  EXPECT_NEAR(Norm(r.witness_p - r.witness_q), 2.0, 1e-15);
  EXPECT_NEAR(r.separating_vector.x, -2.0, 1e-15);
}

TEST(DistanceTest, IdenticalSquaresOverlap) {
  const DistanceResult r = Distance(UnitSquare(), UnitSquare());
  EXPECT_EQ(r.distance, 0.0);
  EXPECT_TRUE(Enclosed(r.termination)) << ToString(r.termination);
}

TEST(DistanceTest, VertexToVertex) {
  const ConvexPolygon p = MakePolygon({{0, 0}, {1, 0}, {0, 1}});
  const ConvexPolygon q = MakePolygon({{3, 0}, {4, 0}, {3, 1}});
  const DistanceResult r = Distance(p, q);
  EXPECT_NEAR(r.distance, 2.0, 1e-15);
}

TEST(DistanceTest, MaxIterationsKeepsBestEstimate) {
  const ConvexPolygon p = testing::RegularPolygon(24);
  const ConvexPolygon q = testing::RegularPolygon(24, 1.0, {2.5, 0.7});
  QueryOptions opts;
  opts.max_iterations = 1;
  const DistanceResult r = Distance(p, q, opts);
  const double exact = baseline::OracleDistance(p, q).distance;
  if (r.termination == Termination::kMaxIterations) {
    EXPECT_EQ(r.iterations, 1);
    EXPECT_GE(r.distance, exact - 1e-12);
    EXPECT_NEAR(r.distance, Norm(r.separating_vector), 1e-12);
  }
  const DistanceResult full = Distance(p, q);
  EXPECT_NEAR(full.distance, exact, 1e-9);
}

TEST(DistanceTest, HillClimbingDoesNotChangeAnswer) {
  for (const PairCase& c : MixedDataset(20).cases) {
    QueryOptions brute;
    brute.use_hill_climbing = false;
    const DistanceResult a = Distance(c.p, c.q);
    const DistanceResult b = Distance(c.p, c.q, brute);
    ASSERT_NEAR(a.distance, b.distance, 1e-9) << c.seed;
  }
}

TEST(DistanceTest, TracedQueryMatchesPlainQuery) {
  for (const PairCase& c : MixedDataset(8).cases) {
    DistanceTrace trace;
    const DistanceResult a = Distance(c.p, c.q, {}, trace);
    const DistanceResult b = Distance(c.p, c.q);
    ASSERT_EQ(a.distance, b.distance);
    ASSERT_EQ(a.support_calls, b.support_calls);
    ASSERT_FALSE(trace.norms.empty());
    for (std::size_t i = 1; i < trace.norms.size(); ++i) {
      ASSERT_LE(trace.norms[i], trace.norms[i - 1] + 1e-12);
    }
  }
}

TEST(DistanceTest, ResultInvariantsOnRandomPairs) {
  for (int n : {4, 12, 24}) {
    for (const PairCase& c : MixedDataset(n).cases) {
      const DistanceResult r = Distance(c.p, c.q);
      const double oracle = baseline::OracleDistance(c.p, c.q).distance;
      ASSERT_LE(std::abs(r.distance - oracle), 1e-7 * std::max(1.0, oracle) + 1e-9) << c.seed;
      if (!Enclosed(r.termination)) {
        EXPECT_NEAR(r.distance, Norm(r.separating_vector), 1e-12);
      } else {
        EXPECT_LE(Norm(r.separating_vector), QueryOptions{}.epsilon + 1e-12);
      }
      if (r.distance > 0.0) {
        EXPECT_NEAR(Norm(r.witness_p - r.witness_q), r.distance, 1e-9);
      }
      EXPECT_TRUE(ContainsPoint(c.p, r.witness_p, 1e-9));
      EXPECT_TRUE(ContainsPoint(c.q, r.witness_q, 1e-9));
      const Vec2 diff = r.witness_p - r.witness_q;
      EXPECT_NEAR(diff.x, r.separating_vector.x, 1e-12);
      EXPECT_NEAR(diff.y, r.separating_vector.y, 1e-12);
      EXPECT_NE(r.termination, Termination::kMaxIterations);
    }
  }
}

TEST(DistanceTest, Symmetric) {
  for (const PairCase& c : MixedDataset(16).cases) {
    ASSERT_NEAR(Distance(c.p, c.q).distance, Distance(c.q, c.p).distance, 1e-9) << c.seed;
  }
}

TEST(DistanceTest, RigidInvariance) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> offset(-20, 20);
  for (const PairCase& c : MixedDataset(12).cases) {
    const Transform2 t{angle(rng), {offset(rng), offset(rng)}};
    const double moved = Distance(ApplyTransform(t, c.p), ApplyTransform(t, c.q)).distance;
    ASSERT_NEAR(moved, Distance(c.p, c.q).distance, 1e-7) << c.seed;
  }
}

TEST(IntersectsTest, DistantSquaresExitOnSeparatingHyperplane) {
  const ConvexPolygon p = UnitSquare();
  const ConvexPolygon q = UnitSquare({3, 0});
  const CollisionResult r = Intersects(p, q);
  EXPECT_FALSE(r.colliding);
  EXPECT_EQ(r.exit, CollisionExit::kSeparatingHyperplane);
  EXPECT_LE(r.support_calls, Distance(p, q).support_calls);
}

TEST(IntersectsTest, IdenticalSquaresCollide) {
  const CollisionResult r = Intersects(UnitSquare(), UnitSquare());
  EXPECT_TRUE(r.colliding);
  EXPECT_NE(r.exit, CollisionExit::kSeparatingHyperplane);
}

TEST(IntersectsTest, VerticalAngleExitTakesPlace) {
  int vertical = 0;
  for (const PairCase& c : MixedDataset(8).cases) {
    const CollisionResult r = Intersects(c.p, c.q);
    if (r.exit == CollisionExit::kVerticalAngleEnclosure) {
      ++vertical;
      if (c.regime != Regime::kTouching) {
        EXPECT_TRUE(baseline::SatIntersects(c.p, c.q)) << c.seed;
      }
    }
  }
  EXPECT_GT(vertical, 0);
}

TEST(IntersectsTest, AgreesWithSatAndNeverWorksHarderThanDistance) {
  for (int n : {4, 8, 16, 24}) {
    for (const PairCase& c : MixedDataset(n).cases) {
      for (bool hcs : {false, true}) {
        QueryOptions opts;
        opts.use_hill_climbing = hcs;
        const CollisionResult r = Intersects(c.p, c.q, opts);
        ASSERT_LE(r.support_calls, Distance(c.p, c.q, opts).support_calls) << c.seed;
        if (r.exit == CollisionExit::kSeparatingHyperplane) {
          EXPECT_FALSE(r.colliding);
        }
        if (r.exit == CollisionExit::kVerticalAngleEnclosure ||
            r.exit == CollisionExit::kSubdistanceEnclosure) {
          EXPECT_TRUE(r.colliding);
        }
        if (c.regime != Regime::kTouching) {
          ASSERT_EQ(r.colliding, baseline::SatIntersects(c.p, c.q)) << c.seed;
        }
      }
    }
  }
}

TEST(WitnessPointsTest, SingleVertex) {
  const SimplexVertex a{{1, 2}, {4, 5}, {3, 3}, 0, 0};
  const auto [p, q] = WitnessPoints(Simplex::Of(a));
  EXPECT_EQ(p, (Vec2{4, 5}));
  EXPECT_EQ(q, (Vec2{3, 3}));
}

TEST(WitnessPointsTest, SymmetricEdgeGivesMidpoints) {
  Simplex s;
  s.verts[0] = {{1, -1}, {2, 0}, {1, 1}, 0, 0};
  s.verts[1] = {{1, 1}, {2, 2}, {1, 1}, 1, 0};
  s.lambdas = {0.5, 0.5, 0.0};
  s.count = 2;
  const auto [p, q] = WitnessPoints(s);
  EXPECT_EQ(p, (Vec2{2, 1}));
  EXPECT_EQ(q, (Vec2{1, 1}));
}

TEST(WitnessPointsTest, ReconstructsSeparatingVector) {
  for (const PairCase& c : MixedDataset(24).cases) {
    const DistanceResult r = Distance(c.p, c.q);
    const auto [p, q] = WitnessPoints(r.simplex);
    const Vec2 v = r.simplex.ClosestPoint();
    EXPECT_NEAR((p - q).x, v.x, 1e-12);
    EXPECT_NEAR((p - q).y, v.y, 1e-12);
    EXPECT_EQ(p, r.witness_p);
  }
}

TEST(ClassifierTest, TouchingBand) {
  DistanceResult r;
  r.distance = 5e-10;
  EXPECT_TRUE(IsTouchingOrOverlapping(r));
  r.distance = 2e-9;
  EXPECT_FALSE(IsTouchingOrOverlapping(r));
}

}  // namespace
}  // namespace barygjk
