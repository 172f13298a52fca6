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

#include "zonelab/dominance.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include "zonelab/error.h"
#include "zonelab/oracle.h"
#include "zonelab/raster.h"

namespace zonelab {
namespace {

const Box kBox = Box::Square(5);

PointCloud Cloud(std::initializer_list<Vector> pts) {
  return PointCloud::FromPoints(std::vector<Vector>(pts));
}

TEST(RayEndpointTest, StopsAtTheBisector) {
  const double eps = 1e-6;
  const double t = RayEndpoint(Vector{-1, 0}, Vector{1, 0}, Cloud({{-1, 0}}),
                               Cloud({{1, 0}}), kBox, NormSpec::L2(), eps);
  EXPECT_NEAR(t, 1, eps);
  // Conservative: the returned point is still dominated.
  EXPECT_LE(t, 1);
}

TEST(RayEndpointTest, RunsToTheBoxWhenMovingAway) {
  EXPECT_DOUBLE_EQ(RayEndpoint(Vector{-1, 0}, Vector{-1, 0}, Cloud({{-1, 0}}),
                               Cloud({{1, 0}}), kBox, NormSpec::L2(), 1e-6),
                   4);
  EXPECT_DOUBLE_EQ(RayEndpoint(Vector{-1, 0}, Vector{0, 1}, Cloud({{-1, 0}}),
                               Cloud({{1, 0}}), kBox, NormSpec::L2(), 1e-6),
                   5);
}

TEST(RayEndpointTest, CoincidentSitesAreRejected) {
  try {
    RayEndpoint(Vector{1, 0}, Vector{1, 0}, Cloud({{1, 0}}), Cloud({{1, 0}}),
                kBox, NormSpec::L2(), 1e-6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSeparated);
  }
}

// Membership along each computed ray: dominated before t_end, not dominated
// past t_end + eps.
TEST(RayEndpointTest, PrefixProperty) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-4.5, 4.5);
  const double eps = 1e-6 * kBox.diameter();
  for (NormSpec n : {NormSpec::L2(), NormSpec::Lp(3), NormSpec::Strange()}) {
    PointCloud site = Cloud({{u(gen), u(gen)}});
    PointCloud others(2);
    while (others.size() < 20) {
      Vector a{u(gen), u(gen)};
      if (Distance(n, a, site.point(0)) > 1) others.Add(a);
    }
    DomMembership m(site, others, n);
    for (const Vector& dir : UnitDirections(2, 64)) {
      const Vector p = site.point(0);
      const double t = RayEndpoint(p, dir, m, kBox, eps);
      const double exit = BoxExit(p, dir, kBox);
      for (int i = 0; i <= 100; ++i) {
        EXPECT_TRUE(m.Contains(p + (t * i / 100) * dir)) << n.Name();
      }
      if (t < exit) {
        for (int i = 1; i <= 100; ++i) {
          const double s = std::min(exit, t + eps) + (exit - t - eps) * i / 100;
          if (s > t + eps) EXPECT_FALSE(m.Contains(p + s * dir)) << n.Name();
        }
      }
    }
  }
}

TEST(DomRegionTest, HalfBoxAgainstTheGridOracle) {
  Site site{0, {Vector{-1, 0}}};
  PointCloud others = Cloud({{1, 0}});
  RegionRays r = DomRegion(site, others, UnitDirections(2, 360), kBox,
                           NormSpec::L2(), DomOptions{});
  GridSpec spec(kBox, 512);
  MembershipGrid raster(spec);
  RasterizeRegion(r, 0, raster);
  EXPECT_NEAR(raster.Fraction(0), 0.5, 0.01);
  MembershipGrid oracle = GridDom(site.cloud(), others, spec, NormSpec::L2());
  EXPECT_LT(SymdiffFraction(raster, oracle, 0), 0.01);
}

TEST(DomRegionTest, FarCornerCompetitorLeavesMostOfTheBox) {
  Site site{0, {Vector{0, 0}}};
  PointCloud others = Cloud({{4.9, 4.9}});
  RegionRays r = DomRegion(site, others, UnitDirections(2, 360), kBox,
                           NormSpec::L2(), DomOptions{.adaptive_depth = 0});
  int at_exit = 0;
  for (const Ray& ray : r.rays) {
    const double exit = BoxExit(ray.source, ray.dir, kBox);
    if (ray.t_end == exit) {
      ++at_exit;
    } else {
      // Only rays heading toward the competitor's corner are cut short.
      EXPECT_GT(ray.dir[0] + ray.dir[1], 0);
    }
  }
  // The bisector x + y = 4.9 crosses about 92 degrees of directions.
  EXPECT_NEAR(at_exit, 268, 4);
  GridSpec spec(kBox, 256);
  MembershipGrid raster(spec);
  RasterizeRegion(r, 0, raster);
  MembershipGrid oracle = GridDom(site.cloud(), others, spec, NormSpec::L2());
  EXPECT_LT(SymdiffFraction(raster, oracle, 0), 3 / std::sqrt(360.0));
}

TEST(DomRegionTest, OverlapIsRejected) {
  Site site{0, {Vector{1, 1}}};
  EXPECT_THROW(DomRegion(site, Cloud({{1, 1}}), UnitDirections(2, 16), kBox,
                         NormSpec::L2(), DomOptions{}),
               Error);
}

TEST(DomRegionTest, RaysAreSortedAndBounded) {
  Site site{3, {Vector{-1, 0}, Vector{-2, 1}}};
  RegionRays r = DomRegion(site, Cloud({{1, 0}, {2, 2}}), UnitDirections(2, 90),
                           kBox, NormSpec::Lp(1.5), DomOptions{});
  EXPECT_EQ(r.site_id, 3);
  int last_source = 0;
  double last_angle = -1;
  for (const Ray& ray : r.rays) {
    EXPECT_EQ(ray.source, site.points[ray.source_index]);
    EXPECT_GE(ray.t_end, 0);
    EXPECT_LE(ray.t_end, BoxExit(ray.source, ray.dir, kBox));
    double a = std::atan2(ray.dir[1], ray.dir[0]);
    if (a < 0) a += 2 * M_PI;
    if (ray.source_index != last_source) last_angle = -1;
    EXPECT_GE(ray.source_index, last_source);
    EXPECT_GT(a, last_angle);
    last_angle = a;
    last_source = ray.source_index;
  }
  // Refinement added directions beyond the base 2 x 90.
  EXPECT_GT(r.rays.size(), 180u);
}

// Enlarging A never lets any ray grow.
TEST(DomRegionTest, AntimonotoneInTheCompetitor) {
  Site site{0, {Vector{0, 0}}};
  PointCloud a = Cloud({{2, 0}});
  PointCloud b = Cloud({{2, 0}, {-3, 1}, {0, -2.5}});
  DomOptions opts{.adaptive_depth = 0};
  auto dirs = UnitDirections(2, 180);
  RegionRays ra = DomRegion(site, a, dirs, kBox, NormSpec::L2(), opts);
  RegionRays rb = DomRegion(site, b, dirs, kBox, NormSpec::L2(), opts);
  ASSERT_EQ(ra.rays.size(), rb.rays.size());
  for (size_t i = 0; i < ra.rays.size(); ++i) {
    EXPECT_LE(rb.rays[i].t_end, ra.rays[i].t_end + opts.eps);
  }
}

TEST(DomRegionTest, WorkersDoNotChangeTheResult) {
  Site site{0, {Vector{0, 0}, Vector{0.5, 0.5}}};
  PointCloud others = Cloud({{2, 0}, {-3, 1}, {0, -2.5}});
  DomOptions one{}, many{};
  many.workers = 4;
  auto dirs = UnitDirections(2, 360);
  RegionRays a = DomRegion(site, others, dirs, kBox, NormSpec::Strange(), one);
  RegionRays b = DomRegion(site, others, dirs, kBox, NormSpec::Strange(), many);
  ASSERT_EQ(a.rays.size(), b.rays.size());
  for (size_t i = 0; i < a.rays.size(); ++i) {
    EXPECT_EQ(a.rays[i].t_end, b.rays[i].t_end);
    EXPECT_EQ(a.rays[i].dir, b.rays[i].dir);
  }
}

TEST(RegionToCloudTest, Examples) {
  RegionRays r;
  r.rays.push_back({0, Vector{0, 0}, Vector{1, 0}, 2});
  PointCloud c1 = RegionToCloud(r, 1);
  ASSERT_EQ(c1.size(), 2u);
  EXPECT_EQ(c1.point(0), (Vector{0, 0}));
  EXPECT_EQ(c1.point(1), (Vector{2, 0}));
  PointCloud c2 = RegionToCloud(r, 2);
  ASSERT_EQ(c2.size(), 3u);
  EXPECT_EQ(c2.point(1), (Vector{1, 0}));
  r.rays[0].t_end = 0;
  EXPECT_EQ(RegionToCloud(r, 4).size(), 1u);
}

TEST(DistPointToRegionTest, Examples) {
  RegionRays r;
  r.rays.push_back({0, Vector{-1, 0}, Vector{1, 0}, 2});
  EXPECT_NEAR(DistPointToRegion(Vector{-1, 0}, r, NormSpec::L2(), 1e-9), 0, 1e-9);
  EXPECT_NEAR(DistPointToRegion(Vector{0, 1}, r, NormSpec::L2(), 1e-9), 1, 1e-9);
  EXPECT_NEAR(DistPointToRegion(Vector{3, 0}, r, NormSpec::L1(), 1e-9), 2, 1e-9);
  EXPECT_THROW(DistPointToRegion(Vector{0, 0}, RegionRays{}, NormSpec::L2(), 1e-9),
               Error);
}

}  // namespace
}  // namespace zonelab
