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

#include <random>

#include <gtest/gtest.h>

#include "barygjk/datasets.h"
#include "test_oracles.h"

namespace barygjk {
namespace {

using testing::CsoSupportValue;
using testing::RegularPolygon;
using testing::UnitSquare;

TEST(SupportBruteTest, FirstVertexWinsTies) {
  const ConvexPolygon sq = UnitSquare();
  const SupportResult r = SupportBrute(sq, {1, 0});
  EXPECT_EQ(r.index, 1u);
  EXPECT_EQ(r.point, (Vec2{1, 0}));
}

TEST(SupportBruteTest, UniqueArgmax) {
  const SupportResult r = SupportBrute(UnitSquare(), {1, 1});
  EXPECT_EQ(r.index, 2u);
  EXPECT_EQ(r.point, (Vec2{1, 1}));
}

TEST(SupportBruteTest, ZeroDirectionSelectsVertexZero) {
  const SupportResult r = SupportBrute(UnitSquare(), {0, 0});
  EXPECT_EQ(r.index, 0u);
  EXPECT_EQ(r.point, (Vec2{0, 0}));
}

TEST(SupportHillClimbTest, StartAtOptimumStaysPut) {
  const ConvexPolygon p = RegularPolygon(7);
  const Vec2 dir{0.3, -0.8};
  const SupportResult brute = SupportBrute(p, dir);
  const SupportResult hc = SupportHillClimb(p, dir, brute.index);
  EXPECT_EQ(hc.index, brute.index);
}

TEST(SupportHillClimbTest, RegularPolygonFromAntipode) {
  const ConvexPolygon p = RegularPolygon(24);
  const SupportResult hc = SupportHillClimb(p, {1, 0}, 12);
  // Enumerate every vertex for the expected value.
  double best = -1e300;
  for (const Vec2& v : p.vertices()) best = std::max(best, Dot(v, {1, 0}));
  EXPECT_EQ(Dot(hc.point, {1, 0}), best);
  EXPECT_EQ(hc.index, 0u);
}

TEST(SupportHillClimbTest, SquareTieFromFarSide) {
  const SupportResult hc = SupportHillClimb(UnitSquare(), {1, 0}, 3);
  EXPECT_EQ(Dot(hc.point, {1, 0}), 1.0);
  EXPECT_TRUE(hc.index == 1u || hc.index == 2u);
}

TEST(SupportHillClimbTest, MatchesBruteForceOnRandomPolygons) {
  std::mt19937_64 rng(3);
  CaseRng poly_rng(99);
  std::uniform_real_distribution<double> u(-1, 1);
  const int sizes[] = {3, 4, 5, 8, 12, 16, 20, 24};
  int checked = 0;
  for (int trial = 0; trial < 1250; ++trial) {
    const ConvexPolygon p = RandomConvexPolygon(sizes[trial % 8], poly_rng);
    for (int k = 0; k < 8; ++k) {
      const Vec2 dir{u(rng), u(rng)};
      const auto start = static_cast<std::uint32_t>(rng() % p.size());
      const SupportResult hc = SupportHillClimb(p, dir, start);
      const SupportResult brute = SupportBrute(p, dir);
      ASSERT_EQ(Dot(hc.point, dir), Dot(brute.point, dir))
          << "n=" << p.size() << " start=" << start;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 10000);
}

TEST(SupportBruteTest, PositivelyHomogeneous) {
  std::mt19937_64 rng(5);
  CaseRng poly_rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const ConvexPolygon p = RandomConvexPolygon(12, poly_rng);
    const Vec2 dir{u(rng), u(rng)};
    const double c = scale(rng);
    const SupportResult a = SupportBrute(p, dir);
    const SupportResult b = SupportBrute(p, c * dir);
    // Same maximal dot value in the original direction.
    const double va = Dot(a.point, dir);
    const double vb = Dot(b.point, dir);
    EXPECT_NEAR(va, vb, 1e-12 * (1 + std::abs(va)));
  }
}

TEST(CsoSupportTest, SquaresAgainstEnumeration) {
  const ConvexPolygon sq = UnitSquare();
  const SimplexVertex w = CsoSupport(sq, sq, {1, 0});
  EXPECT_EQ(w.w, (Vec2{1, 0}));
  EXPECT_EQ(Dot(w.w, {1, 0}), CsoSupportValue(sq, sq, {1, 0}));
  EXPECT_EQ(w.p, (Vec2{1, 0}));
  EXPECT_EQ(w.q, (Vec2{0, 0}));
}

TEST(CsoSupportTest, TranslationAddsToSupport) {
  const double d = 2.5;
  const SimplexVertex w = CsoSupport(UnitSquare({d, 0}), UnitSquare(), {1, 0});
  EXPECT_EQ(w.w.x, 1 + d);
}

TEST(CsoSupportTest, ZeroDirection) {
  const ConvexPolygon p = UnitSquare({3, 1});
  const ConvexPolygon q = RegularPolygon(5);
  const SimplexVertex w = CsoSupport(p, q, {0, 0});
  EXPECT_EQ(w.w, p[0] - q[0]);
}

TEST(CsoSupportTest, AntisymmetricAndMatchesEnumeration) {
  std::mt19937_64 rng(8);
  CaseRng poly_rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 2000; ++i) {
    const ConvexPolygon p = RandomConvexPolygon(3 + i % 10, poly_rng);
    const ConvexPolygon q = ApplyTransform(Transform2{u(rng), {u(rng), u(rng)}},
                                           RandomConvexPolygon(3 + i % 7, poly_rng));
    const Vec2 dir{u(rng), u(rng)};
    const SimplexVertex a = CsoSupport(p, q, dir);
    const SimplexVertex b = CsoSupport(q, p, -dir);
    EXPECT_EQ(a.w, -b.w);
    EXPECT_EQ(a.w, a.p - a.q);
    EXPECT_EQ(a.p, p[a.ip]);
    EXPECT_EQ(a.q, q[a.iq]);
    EXPECT_NEAR(Dot(a.w, dir), CsoSupportValue(p, q, dir), 1e-12);
    const SimplexVertex warm = CsoSupport(p, q, dir, WarmStart{0, 0});
    EXPECT_EQ(Dot(warm.p, dir), Dot(a.p, dir));
    EXPECT_EQ(Dot(warm.q, -dir), Dot(a.q, -dir));
  }
}

TEST(InitialDirectionTest, CentroidDifference) {
  const Vec2 d = InitialDirection(UnitSquare(), UnitSquare({3, 0}));
  EXPECT_EQ(d, (Vec2{-3, 0}));
}

TEST(InitialDirectionTest, IdenticalShapesFallBackToUnitX) {
  EXPECT_EQ(InitialDirection(UnitSquare(), UnitSquare()), (Vec2{1, 0}));
}

TEST(InitialDirectionTest, SharedFirstVertexUsesCentroids) {
  const ConvexPolygon p = MakePolygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  const ConvexPolygon q = MakePolygon({{0, 0}, {1, 0}, {0, 1}});
  const Vec2 d = InitialDirection(p, q);
  EXPECT_DOUBLE_EQ(d.x, 1.0 - 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(d.y, 1.0 - 1.0 / 3.0);
}

}  // namespace
}  // namespace barygjk
