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

#include "zonelab/diagram.h"

#include <cmath>

#include <gtest/gtest.h>
#include "zonelab/error.h"
#include "zonelab/raster.h"

namespace zonelab {
namespace {

IterationParams Fast() {
  IterationParams p;
  p.ray_count = 360;
  p.monotonicity_resolution = 0;
  return p;
}

Problem TwoPoints(Vector a, Vector b, NormSpec norm = NormSpec::L2(),
                  IterationParams p = Fast()) {
  return Problem::Create({Site{0, {a}}, Site{1, {b}}}, Box::Square(5), norm, p);
}

ErrorCode CodeOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kIo;
}

TEST(ProblemTest, RejectsBadSiteSets) {
  EXPECT_EQ(CodeOf([] {
              Problem::Create({Site{0, {Vector{0, 0}}}}, Box::Square(5),
                              NormSpec::L2());
            }),
            ErrorCode::kConstruction);
  EXPECT_EQ(CodeOf([] { TwoPoints(Vector{1, 1}, Vector{1, 1}); }),
            ErrorCode::kNotSeparated);
  EXPECT_EQ(CodeOf([] { TwoPoints(Vector{0, 0}, Vector{6, 0}); }),
            ErrorCode::kDomain);
}

TEST(ProblemTest, Separation) {
  Problem p = Problem::Create(
      {Site{0, {Vector{0, 0}, Vector{1, 0}}}, Site{1, {Vector{4, 0}}},
       Site{2, {Vector{-3, 0}}}},
      Box::Square(5), NormSpec::L2(), Fast());
  EXPECT_DOUBLE_EQ(p.min_separation(), 3);
  EXPECT_DOUBLE_EQ(p.site_separation(0), 3);
  EXPECT_DOUBLE_EQ(p.site_separation(1), 3);
  EXPECT_DOUBLE_EQ(p.site_separation(2), 3);
}

TEST(DomMapTest, WholeBoxCollapsesToTheSites) {
  Problem p = TwoPoints(Vector{-2, 0}, Vector{2, 1});
  const double spacing = 0.25;
  DiagramTuple all = WholeBoxTuple(p, spacing);
  DiagramTuple d = DomMap(p, all);
  for (const RegionRays& r : d.regions) {
    for (const Ray& ray : r.rays) EXPECT_LE(ray.t_end, spacing);
  }
}

TEST(DomMapTest, WrongTupleLengthIsRejected) {
  Problem p = TwoPoints(Vector{-1, 0}, Vector{1, 0});
  DiagramTuple t = SitesTuple(p);
  t.regions.pop_back();
  t.clouds.pop_back();
  EXPECT_EQ(CodeOf([&] { DomMap(p, t); }), ErrorCode::kDomain);
}

TEST(VoronoiTest, SymmetricPairSplitsTheBox) {
  for (NormSpec n : {NormSpec::L2(), NormSpec::Lp(3), NormSpec::Strange()}) {
    Problem p = TwoPoints(Vector{-1, 0}, Vector{1, 0}, n);
    DiagramTuple v = Voronoi(p);
    MembershipGrid g = RasterizeTuple(v, GridSpec(p.box(), 256));
    EXPECT_NEAR(g.Fraction(0), 0.5, 0.01) << n.Name();
    EXPECT_NEAR(g.Fraction(1), 0.5, 0.01) << n.Name();
  }
}

// Under l-infinity the same pair ties on two wedges above and below, which
// both components own.
TEST(VoronoiTest, MaxNormTiesAreShared) {
  Problem p = TwoPoints(Vector{-1, 0}, Vector{1, 0}, NormSpec::Linf());
  MembershipGrid g = RasterizeTuple(Voronoi(p), GridSpec(p.box(), 256));
  // The wedges |y| >= |x| + 1 cover 32 of the box's 100; each side keeps
  // 50 - 16 strictly.
  EXPECT_NEAR(g.Fraction(0), 0.34 + 0.32, 0.01);
  EXPECT_NEAR(g.Fraction(1), g.Fraction(0), 0.005);
}

DiagramTuple CloudTuple(std::vector<std::vector<Vector>> comps) {
  DiagramTuple t;
  for (auto& c : comps) {
    t.clouds.push_back(PointCloud::FromPoints(c));
    t.regions.emplace_back();
  }
  return t;
}

TEST(ConvergenceGapTest, Examples) {
  DiagramTuple a = CloudTuple({{{0, 0}}, {{1, 1}}});
  DiagramTuple b = CloudTuple({{{0, 0}, {3, 4}}, {{1, 1}}});
  std::vector<double> g = ConvergenceGap(a, b, NormSpec::L2());
  ASSERT_EQ(g.size(), 2u);
  EXPECT_DOUBLE_EQ(g[0], 5);
  EXPECT_DOUBLE_EQ(g[1], 0);
  EXPECT_EQ(ConvergenceGap(a, a, NormSpec::L2()), (std::vector<double>{0, 0}));
  DiagramTuple c = CloudTuple({{{0, 0}}});
  EXPECT_EQ(CodeOf([&] { ConvergenceGap(a, c, NormSpec::L2()); }),
            ErrorCode::kDomain);
}

TEST(IterateTest, GapsShrinkAndTheSandwichHolds) {
  Problem p = TwoPoints(Vector{-1, 0}, Vector{1, 0});
  IterationTrace t = Iterate(p);
  EXPECT_TRUE(t.converged);
  EXPECT_FALSE(t.outside_guarantees);
  EXPECT_LE(t.max_gap(t.last()), p.params().gap_tol * p.diameter());
  for (int n = 1; n <= t.last(); ++n) {
    EXPECT_LT(t.max_gap(n), t.max_gap(n - 1) + 1e-9);
  }
  SandwichReport s = CheckSandwich(t, p.box(), 128);
  EXPECT_TRUE(s.ok());
  EXPECT_GT(s.checks, 0u);
}

TEST(IterateTest, NonStrictNormIsFlagged) {
  Problem p = TwoPoints(Vector{0, -3}, Vector{0, 3}, NormSpec::Linf());
  p.mutable_params().max_iters = 2;
  EXPECT_TRUE(Iterate(p).outside_guarantees);
}

TEST(CheckSandwichTest, DetectsSwappedBounds) {
  Problem p = TwoPoints(Vector{-1, 0}, Vector{1, 0});
  p.mutable_params().max_iters = 2;
  IterationTrace t = Iterate(p);
  std::swap(t.inner, t.outer);
  SandwichReport s = CheckSandwich(t, p.box(), 128);
  EXPECT_FALSE(s.ok());
  EXPECT_FALSE(s.violations.empty());
}

TEST(CheckSandwichTest, SingleStepTrace) {
  Problem p = TwoPoints(Vector{-1, 0}, Vector{1, 0});
  IterationTrace t;
  t.inner.push_back(SitesTuple(p));
  t.outer.push_back(Voronoi(p));
  SandwichReport s = CheckSandwich(t, p.box(), 64);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.checks, 2u);  // I(0)_k in O(0)_k
}

TEST(TwoSiteZoneTest, EuclideanPairIsAFixedPoint) {
  Problem p = TwoPoints(Vector{-1, 0}, Vector{1, 0});
  IterationTrace t = Iterate(p);
  ZonePair z = TwoSiteZone(p, t);
  const double tol = 2 * p.params().gap_tol * p.diameter();
  for (double r : z.residual_first) EXPECT_LE(r, tol);
  for (double r : z.residual_second) EXPECT_LE(r, tol);
}

TEST(TwoSiteZoneTest, NeedsTwoSites) {
  Problem p = Problem::Create(
      {Site{0, {Vector{-2, 0}}}, Site{1, {Vector{2, 0}}}, Site{2, {Vector{0, 3}}}},
      Box::Square(5), NormSpec::L2(), Fast());
  p.mutable_params().max_iters = 1;
  IterationTrace t = Iterate(p);
  EXPECT_EQ(CodeOf([&] { TwoSiteZone(p, t); }), ErrorCode::kDomain);
}

TEST(FixedPointResidualTest, VoronoiIsNotAFixedPoint) {
  Problem p = TwoPoints(Vector{-1, 0}, Vector{1, 0});
  std::vector<double> r = FixedPointResidual(p, Voronoi(p));
  ASSERT_EQ(r.size(), 2u);
  // Dom(Voronoi) is far smaller than the half boxes.
  EXPECT_GT(r[0], 1);
  EXPECT_GT(r[1], 1);
}

}  // namespace
}  // namespace zonelab
