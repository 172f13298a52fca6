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

// Dominance regions dom(P, A) = {x : d(x, P) <= d(x, A)} represented as
// bundles of rays leaving the points of P. Along a ray from p the set of
// dominated parameters is an interval [0, t*] (for strictly convex norms),
// so each ray is resolved by testing the box exit and otherwise bisecting.

#ifndef ZONELAB_DOMINANCE_H_
#define ZONELAB_DOMINANCE_H_

#include <span>
#include <vector>

#include "zonelab/cloud.h"
#include "zonelab/geometry.h"

namespace zonelab {

// One generator P_k: a finite nonempty point set.
struct Site {
  int id = 0;
  std::vector<Vector> points;

  PointCloud cloud() const { return PointCloud::FromPoints(points); }
};

struct Ray {
  int source_index = 0;  // index into the owning site's points
  Vector source;
  Vector dir;  // Euclidean unit
  double t_end = 0;

  Vector endpoint() const { return source + t_end * dir; }
};

// A dominance region as rays grouped by source; within a source the rays of
// a planar region are sorted by angle in [0, 2*pi).
struct RegionRays {
  int site_id = 0;
  int generation = 0;
  std::vector<Ray> rays;

  int dim() const { return rays.empty() ? 0 : rays.front().source.dim(); }
};

// Decides x in dom(P, A) with the non-strict comparison d(x,P) <= d(x,A).
class DomMembership {
 public:
  DomMembership(PointCloud site, const PointCloud& others,
                const NormSpec& norm, bool accelerated = true);

  bool Contains(const double* x) const;
  bool Contains(const Vector& x) const { return Contains(x.data()); }

  // d(x, P) and d(x, A).
  double SiteDistance(const double* x) const;
  double OthersDistance(const double* x) const { return others_.Nearest(x); }

 private:
  PointCloud site_;
  NearestIndex others_;
  NormSpec norm_;
};

// Endpoint of the ray p + t*u, t in [0, box exit], to within `eps`: the box
// exit itself when it is dominated, otherwise the in-dom end of a bisection
// bracket [in, out] of width <= eps.
double RayEndpoint(const Vector& p, const Vector& u,
                   const DomMembership& membership, const Box& box, double eps);

// Convenience overload that builds the membership test. Throws kNotSeparated
// when p is at distance 0 from `others`.
double RayEndpoint(const Vector& p, const Vector& u, const PointCloud& site,
                   const PointCloud& others, const Box& box,
                   const NormSpec& norm, double eps);

struct DomOptions {
  double eps = 1e-6;
  // Refinement passes for planar regions: whenever two angularly adjacent
  // endpoints of one source are more than refine_threshold apart (Euclidean),
  // the bisecting direction is added.
  int adaptive_depth = 2;
  double refine_threshold = 0;  // <= 0 picks 2 * box diameter / dirs.size()
  int workers = 1;
  bool accelerated = true;
};

// dom(P, A) with one ray per (site point, direction) pair plus refinement.
// Throws kNotSeparated when a site point has distance 0 to `others`.
RegionRays DomRegion(const Site& site, const PointCloud& others,
                     std::span<const Vector> dirs, const Box& box,
                     const NormSpec& norm, const DomOptions& options);

// Sources (once each), ray endpoints and samples_per_ray - 1 equally spaced
// interior points of every ray.
PointCloud RegionToCloud(const RegionRays& region, int samples_per_ray);

// Distance from x to the union of the ray segments.
double DistPointToRegion(const Vector& x, const RegionRays& region,
                         const NormSpec& norm, double tol);

}  // namespace zonelab

#endif  // ZONELAB_DOMINANCE_H_
