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

#include <algorithm>
#include <limits>
#include <numbers>

#include "zonelab/parallel.h"

namespace zonelab {

DomMembership::DomMembership(PointCloud site, const PointCloud& others,
                             const NormSpec& norm, bool accelerated)
    : site_(std::move(site)), others_(others, norm, accelerated), norm_(norm) {
  if (site_.empty()) throw Error(ErrorCode::kDomain, "empty site");
  if (site_.dim() != others.dim()) {
    throw Error(ErrorCode::kDimension, "site and region dimensions differ");
  }
}

double DomMembership::SiteDistance(const double* x) const {
  return Visit(norm_, [&](const auto& norm) {
    const int d = site_.dim();
    double diff[kMaxDim];
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < site_.size(); ++i) {
      const double* p = site_.at(i);
      for (int c = 0; c < d; ++c) diff[c] = x[c] - p[c];
      best = std::min(best, norm(diff, d));
    }
    return best;
  });
}

bool DomMembership::Contains(const double* x) const {
  return !others_.AnyCloserThan(x, SiteDistance(x));
}

double RayEndpoint(const Vector& p, const Vector& u,
                   const DomMembership& membership, const Box& box,
                   double eps) {
  if (!(eps > 0)) throw Error(ErrorCode::kParameter, "eps must be positive");
  const double exit = BoxExit(p, u, box);
  if (exit == 0) return 0;
  const int d = p.dim();
  double x[kMaxDim];
  auto at = [&](double t) {
    for (int c = 0; c < d; ++c) x[c] = p[c] + t * u[c];
    // Rounding can push the exit point a hair outside the box.
    for (int c = 0; c < d; ++c) {
      x[c] = std::clamp(x[c], box.lo()[c], box.hi()[c]);
    }
    return x;
  };
  if (membership.Contains(at(exit))) return exit;
  double lo = 0, hi = exit;
  while (hi - lo > eps) {
    double mid = 0.5 * (lo + hi);
    if (membership.Contains(at(mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double RayEndpoint(const Vector& p, const Vector& u, const PointCloud& site,
                   const PointCloud& others, const Box& box,
                   const NormSpec& norm, double eps) {
  DomMembership membership(site, others, norm);
  if (membership.OthersDistance(p.data()) == 0) {
    throw Error(ErrorCode::kNotSeparated,
                "ray source " + p.ToString() + " lies on the other set");
  }
  return RayEndpoint(p, u, membership, box, eps);
}

namespace {

double Angle(const Vector& dir) {
  double a = std::atan2(dir[1], dir[0]);
  return a < 0 ? a + 2 * std::numbers::pi : a;
}

struct PlanarRay {
  double angle;
  Ray ray;
};

// Adds bisecting directions between angularly adjacent rays of each source
// whose endpoints are far apart.
void RefinePlanar(std::vector<std::vector<PlanarRay>>& by_source,
                  const DomMembership& membership, const Box& box,
                  const DomOptions& options, double threshold) {
  for (int pass = 0; pass < options.adaptive_depth; ++pass) {
    std::vector<PlanarRay> fresh;
    std::vector<size_t> owner;
    for (size_t s = 0; s < by_source.size(); ++s) {
      auto& rays = by_source[s];
      const size_t m = rays.size();
      if (m < 2) continue;
      for (size_t i = 0; i < m; ++i) {
        const PlanarRay& a = rays[i];
        const PlanarRay& b = rays[(i + 1) % m];
        double gap = (a.ray.endpoint() - b.ray.endpoint()).euclidean_norm();
        if (gap <= threshold) continue;
        double hi = b.angle + (i + 1 == m ? 2 * std::numbers::pi : 0);
        double mid = 0.5 * (a.angle + hi);
        if (!(mid > a.angle && mid < hi)) continue;  // angular resolution exhausted
        if (mid >= 2 * std::numbers::pi) mid -= 2 * std::numbers::pi;
        PlanarRay r{mid, a.ray};
        r.ray.dir = Vector{std::cos(mid), std::sin(mid)};
        fresh.push_back(r);
        owner.push_back(s);
      }
    }
    if (fresh.empty()) return;
    ParallelFor(fresh.size(), options.workers, [&](size_t i) {
      Ray& ray = fresh[i].ray;
      ray.t_end = RayEndpoint(ray.source, ray.dir, membership, box, options.eps);
    });
    for (size_t i = 0; i < fresh.size(); ++i) {
      by_source[owner[i]].push_back(fresh[i]);
    }
    for (auto& rays : by_source) {
      std::stable_sort(rays.begin(), rays.end(),
                       [](const PlanarRay& a, const PlanarRay& b) {
                         return a.angle < b.angle;
                       });
    }
  }
}

}  // namespace

RegionRays DomRegion(const Site& site, const PointCloud& others,
                     std::span<const Vector> dirs, const Box& box,
                     const NormSpec& norm, const DomOptions& options) {
  if (site.points.empty()) throw Error(ErrorCode::kDomain, "empty site");
  if (dirs.empty()) throw Error(ErrorCode::kParameter, "no ray directions");
  if (others.empty()) {
    throw Error(ErrorCode::kDomain, "dominance against an empty set");
  }
  const int dim = site.points.front().dim();
  norm.CheckDim(dim);
  for (const auto& u : dirs) {
    if (u.dim() != dim) {
      throw Error(ErrorCode::kDimension, "direction dimension differs");
    }
  }
  DomMembership membership(site.cloud(), others, norm, options.accelerated);
  for (const auto& p : site.points) {
    if (!box.Contains(p)) {
      throw Error(ErrorCode::kDomain, "site point " + p.ToString() +
                                          " outside the box");
    }
    if (membership.OthersDistance(p.data()) == 0) {
      throw Error(ErrorCode::kNotSeparated,
                  "site " + std::to_string(site.id) + " point " +
                      p.ToString() + " touches the other regions");
    }
  }

  const size_t n_dirs = dirs.size();
  std::vector<Ray> rays(site.points.size() * n_dirs);
  ParallelFor(rays.size(), options.workers, [&](size_t i) {
    Ray& ray = rays[i];
    ray.source_index = int(i / n_dirs);
    ray.source = site.points[ray.source_index];
    ray.dir = dirs[i % n_dirs];
    ray.t_end =
        RayEndpoint(ray.source, ray.dir, membership, box, options.eps);
  });

  RegionRays region;
  region.site_id = site.id;
  if (dim != 2) {
    region.rays = std::move(rays);
    return region;
  }

  std::vector<std::vector<PlanarRay>> by_source(site.points.size());
  for (auto& ray : rays) {
    by_source[ray.source_index].push_back({Angle(ray.dir), ray});
  }
  for (auto& group : by_source) {
    std::stable_sort(group.begin(), group.end(),
                     [](const PlanarRay& a, const PlanarRay& b) {
                       return a.angle < b.angle;
                     });
  }
  double threshold = options.refine_threshold > 0
                         ? options.refine_threshold
                         : 2 * box.diameter() / double(n_dirs);
  RefinePlanar(by_source, membership, box, options, threshold);
  for (const auto& group : by_source) {
    for (const auto& r : group) region.rays.push_back(r.ray);
  }
  return region;
}

PointCloud RegionToCloud(const RegionRays& region, int samples_per_ray) {
  if (samples_per_ray < 1) {
    throw Error(ErrorCode::kParameter, "samples_per_ray must be >= 1");
  }
  if (region.rays.empty()) return PointCloud();
  const int d = region.dim();
  PointCloud cloud(d);
  std::vector<int> seen;
  double x[kMaxDim];
  for (const Ray& ray : region.rays) {
    if (std::find(seen.begin(), seen.end(), ray.source_index) == seen.end()) {
      seen.push_back(ray.source_index);
      cloud.Add(ray.source);
    }
    if (ray.t_end == 0) continue;
    for (int j = 1; j <= samples_per_ray; ++j) {
      double t = j == samples_per_ray ? ray.t_end
                                      : ray.t_end * j / samples_per_ray;
      for (int c = 0; c < d; ++c) x[c] = ray.source[c] + t * ray.dir[c];
      cloud.Add(x);
    }
  }
  return cloud;
}

double DistPointToRegion(const Vector& x, const RegionRays& region,
                         const NormSpec& norm, double tol) {
  if (region.rays.empty()) {
    throw Error(ErrorCode::kDomain, "distance to an empty region");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Ray& ray : region.rays) {
    best = std::min(best, DistPointToSegment(x, ray.source, ray.endpoint(),
                                             norm, tol));
    if (best == 0) break;
  }
  return best;
}

}  // namespace zonelab
