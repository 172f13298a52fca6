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

#include "zonelab/raster.h"

#include <algorithm>
#include <map>
#include <numbers>

namespace zonelab {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

struct FanRay {
  double angle;
  double t;
  double ex, ey;  // endpoint
};

double Angle(double x, double y) {
  double a = std::atan2(y, x);
  return a < 0 ? a + kTwoPi : a;
}

void RasterizeFan(double px, double py, std::vector<FanRay>& fan, int k,
                  MembershipGrid& grid) {
  const GridSpec& spec = grid.spec();
  std::sort(fan.begin(), fan.end(),
            [](const FanRay& a, const FanRay& b) { return a.angle < b.angle; });
  double bx0 = px, bx1 = px, by0 = py, by1 = py;
  for (const auto& r : fan) {
    bx0 = std::min(bx0, r.ex);
    bx1 = std::max(bx1, r.ex);
    by0 = std::min(by0, r.ey);
    by1 = std::max(by1, r.ey);
  }
  const int res = spec.resolution();
  const double x0 = spec.box().lo()[0], y0 = spec.box().lo()[1];
  const double hx = spec.cell_width(), hy = spec.cell_height();
  int i0 = std::clamp(int(std::floor((bx0 - x0) / hx - 0.5)), 0, res - 1);
  int i1 = std::clamp(int(std::ceil((bx1 - x0) / hx - 0.5)), 0, res - 1);
  int j0 = std::clamp(int(std::floor((by0 - y0) / hy - 0.5)), 0, res - 1);
  int j1 = std::clamp(int(std::ceil((by1 - y0) / hy - 0.5)), 0, res - 1);
  const size_t m = fan.size();
  for (int j = j0; j <= j1; ++j) {
    const double y = y0 + (j + 0.5) * hy;
    for (int i = i0; i <= i1; ++i) {
      const double x = x0 + (i + 0.5) * hx;
      const double vx = x - px, vy = y - py;
      const double len = std::hypot(vx, vy);
      const size_t cell = size_t(j) * res + i;
      if (len == 0) {
        grid.Set(cell, k);
        continue;
      }
      const double theta = Angle(vx, vy);
      auto it = std::upper_bound(
          fan.begin(), fan.end(), theta,
          [](double t, const FanRay& r) { return t < r.angle; });
      size_t a = it == fan.begin() ? m - 1 : size_t(it - fan.begin()) - 1;
      size_t b = (a + 1) % m;
      const FanRay& ra = fan[a];
      const FanRay& rb = fan[b];
      double span = m == 1 ? kTwoPi : rb.angle - ra.angle;
      if (span <= 0) span += kTwoPi;
      double offset = theta - ra.angle;
      if (offset < 0) offset += kTwoPi;
      bool inside;
      const double cx = rb.ex - ra.ex, cy = rb.ey - ra.ey;
      const double sp = cx * (py - ra.ey) - cy * (px - ra.ex);
      const double chord = std::hypot(cx, cy);
      if (m >= 3 && span < std::numbers::pi && std::abs(sp) > 1e-12 * chord) {
        const double sx = cx * (y - ra.ey) - cy * (x - ra.ex);
        inside = sx == 0 || (sx > 0) == (sp > 0);
      } else {
        double r = m == 1 ? ra.t : ra.t + (rb.t - ra.t) * offset / span;
        inside = len <= r;
      }
      if (inside) grid.Set(cell, k);
    }
  }
}

}  // namespace

void RasterizeRegion(const RegionRays& region, int k, MembershipGrid& grid) {
  if (region.dim() != 0 && region.dim() != 2) {
    throw Error(ErrorCode::kDimension, "only planar regions rasterize");
  }
  std::map<int, std::vector<const Ray*>> by_source;
  for (const Ray& r : region.rays) by_source[r.source_index].push_back(&r);
  for (auto& [s, rays] : by_source) {
    const Vector& p = rays.front()->source;
    grid.Set(grid.spec().CellOf(p.data()), k);
    std::vector<FanRay> fan;
    fan.reserve(rays.size());
    for (const Ray* r : rays) {
      if (r->t_end <= 0) continue;
      Vector e = r->endpoint();
      fan.push_back({Angle(r->dir[0], r->dir[1]), r->t_end, e[0], e[1]});
    }
    if (!fan.empty()) RasterizeFan(p[0], p[1], fan, k, grid);
  }
}

MembershipGrid RasterizeTuple(const DiagramTuple& tuple, const GridSpec& spec) {
  if (tuple.K() > kMaxGridLabels) {
    throw Error(ErrorCode::kParameter, "too many components for a grid");
  }
  MembershipGrid grid(spec);
  for (int k = 0; k < int(tuple.regions.size()); ++k) {
    RasterizeRegion(tuple.regions[k], k, grid);
  }
  return grid;
}

size_t InclusionViolations(const MembershipGrid& a, const MembershipGrid& b,
                           int k) {
  if (!(a.spec() == b.spec())) {
    throw Error(ErrorCode::kDomain, "grid specs differ");
  }
  const int res = a.spec().resolution();
  size_t violations = 0;
  for (int j = 0; j < res; ++j) {
    for (int i = 0; i < res; ++i) {
      if (!a.Has(size_t(j) * res + i, k)) continue;
      bool covered = false;
      for (int dj = -1; dj <= 1 && !covered; ++dj) {
        for (int di = -1; di <= 1 && !covered; ++di) {
          int x = i + di, y = j + dj;
          if (x < 0 || y < 0 || x >= res || y >= res) continue;
          covered = b.Has(size_t(y) * res + x, k);
        }
      }
      violations += !covered;
    }
  }
  return violations;
}

}  // namespace zonelab
