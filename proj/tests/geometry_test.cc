// Copyright 2026 The Zonelab Authors.
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

#include "zonelab/geometry.h"

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>
#include "zonelab/error.h"

namespace zonelab {
namespace {

void ExpectVectorNear(const Vector& a, const Vector& b, double tol) {
  ASSERT_EQ(a.dim(), b.dim());
  for (int i = 0; i < a.dim(); ++i) EXPECT_NEAR(a[i], b[i], tol) << i;
}

TEST(UnitDirectionsTest, FourPlanarDirections) {
  auto d = UnitDirections(2, 4);
  ASSERT_EQ(d.size(), 4u);
  // Axis directions are exact, not merely close.
  EXPECT_EQ(d[0], (Vector{1, 0}));
  EXPECT_EQ(d[1], (Vector{0, 1}));
  EXPECT_EQ(d[2], (Vector{-1, 0}));
  EXPECT_EQ(d[3], (Vector{0, -1}));
}

TEST(UnitDirectionsTest, EightIncludeTheDiagonal) {
  auto d = UnitDirections(2, 8);
  ExpectVectorNear(d[1], Vector{M_SQRT1_2, M_SQRT1_2}, 1e-15);
}

TEST(UnitDirectionsTest, SphereCovering) {
  for (int dim : {3, 4, 6}) {
    auto d = UnitDirections(dim, 100);
    ASSERT_EQ(d.size(), 100u);
    double min_angle = 10;
    for (size_t i = 0; i < d.size(); ++i) {
      EXPECT_NEAR(d[i].euclidean_norm(), 1, 1e-12);
      for (size_t j = i + 1; j < d.size(); ++j) {
        double dot = 0;
        for (int c = 0; c < dim; ++c) dot += d[i][c] * d[j][c];
        min_angle = std::min(min_angle, std::acos(std::clamp(dot, -1.0, 1.0)));
      }
    }
    EXPECT_GT(min_angle, 0.01) << dim;
  }
}

TEST(UnitDirectionsTest, Deterministic) {
  for (int dim : {2, 3, 5}) EXPECT_EQ(UnitDirections(dim, 77), UnitDirections(dim, 77));
}

TEST(UnitDirectionsTest, RejectsTooFew) {
  EXPECT_THROW(UnitDirections(2, 3), Error);
}

TEST(DistPointToPointsTest, Examples) {
  std::vector<Vector> s = {Vector{3, 4}, Vector{0, 5}};
  EXPECT_DOUBLE_EQ(DistPointToPoints(Vector{0, 0}, s, NormSpec::L2()), 5);
  std::vector<Vector> one = {Vector{1, 1}};
  EXPECT_DOUBLE_EQ(DistPointToPoints(Vector{1, 1}, one, NormSpec::Linf()), 0);
  std::vector<Vector> l1 = {Vector{1, 2}};
  EXPECT_DOUBLE_EQ(DistPointToPoints(Vector{0, 0}, l1, NormSpec::L1()), 3);
  EXPECT_THROW(DistPointToPoints(Vector{0, 0}, {}, NormSpec::L2()), Error);
}

TEST(DistPointToSegmentTest, Examples) {
  const Vector a{-1, 0}, b{1, 0};
  EXPECT_NEAR(DistPointToSegment(Vector{0, 1}, a, b, NormSpec::L2(), 1e-9), 1, 1e-9);
  EXPECT_NEAR(DistPointToSegment(Vector{0, 1}, a, b, NormSpec::L1(), 1e-9), 1, 1e-9);
  EXPECT_NEAR(DistPointToSegment(Vector{5, 0}, a, b, NormSpec::L2(), 1e-9), 4, 1e-9);
  EXPECT_NEAR(DistPointToSegment(Vector{3, 3}, a, a, NormSpec::L2(), 1e-9), 5, 1e-12);
}

// Golden-section answer vs dense sampling along the segment.
TEST(DistPointToSegmentTest, MatchesDenseSampling) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-5, 5);
  for (NormSpec n : {NormSpec::L2(), NormSpec::L1(), NormSpec::Lp(3),
                     NormSpec::Strange()}) {
    for (int trial = 0; trial < 30; ++trial) {
      Vector x{u(gen), u(gen)}, a{u(gen), u(gen)}, b{u(gen), u(gen)};
      double sampled = 1e300;
      for (int i = 0; i <= 10000; ++i) {
        sampled = std::min(sampled, Distance(n, x, a + (i / 1e4) * (b - a)));
      }
      const double got = DistPointToSegment(x, a, b, n, 1e-9);
      EXPECT_LE(got, sampled + 1e-9) << n.Name();
      // Sampling can miss the minimum by at most half a sample spacing.
      EXPECT_GE(got, sampled - 0.5e-4 * 2 * (b - a).euclidean_norm() - 1e-9);
    }
  }
}

TEST(BoxExitTest, Examples) {
  const Box box = Box::Square(5);
  EXPECT_DOUBLE_EQ(BoxExit(Vector{0, 0}, Vector{1, 0}, box), 5);
  EXPECT_DOUBLE_EQ(BoxExit(Vector{5, 0}, Vector{1, 0}, box), 0);
  EXPECT_NEAR(BoxExit(Vector{0, 0}, Vector{M_SQRT1_2, M_SQRT1_2}, box),
              5 * std::sqrt(2.0), 1e-12);
  EXPECT_THROW(BoxExit(Vector{6, 0}, Vector{1, 0}, box), Error);
}

TEST(BoxExitTest, ExitPointLiesOnTheBoundary) {
  const Box box(Vector{-1, -2, -3}, Vector{4, 5, 6});
  for (const Vector& u : UnitDirections(3, 200)) {
    const Vector p{0.5, 0.25, -1};
    const double t = BoxExit(p, u, box);
    const Vector e = p + t * u;
    double slack = 1e300;
    for (int i = 0; i < 3; ++i) {
      slack = std::min({slack, std::abs(e[i] - box.lo()[i]),
                        std::abs(e[i] - box.hi()[i])});
      EXPECT_GE(e[i], box.lo()[i] - 1e-12);
      EXPECT_LE(e[i], box.hi()[i] + 1e-12);
    }
    EXPECT_LT(slack, 1e-12);
  }
}

}  // namespace
}  // namespace zonelab
