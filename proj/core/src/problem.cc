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

#include "zonelab/problem.h"

#include <algorithm>
#include <limits>

namespace zonelab {

void IterationParams::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kParameter, what);
  };
  if (ray_count < 4) fail("ray_count must be >= 4");
  if (samples_per_ray < 1) fail("samples_per_ray must be >= 1");
  if (adaptive_depth < 0) fail("adaptive_depth must be >= 0");
  if (max_iters < 1) fail("max_iters must be >= 1");
  if (!(gap_tol > 0 && gap_tol < 1)) fail("gap_tol must lie in (0, 1)");
  if (std::isnan(eps_endpoint)) fail("eps_endpoint is NaN");
  if (workers < 0) fail("workers must be >= 0");
  if (monotonicity_resolution < 0) fail("monotonicity_resolution < 0");
}

Problem::Problem(std::vector<Site> sites, Box box, NormSpec norm,
                 IterationParams params)
    : sites_(std::move(sites)),
      box_(std::move(box)),
      norm_(norm),
      params_(params) {}

Problem Problem::Create(std::vector<Site> sites, Box box, NormSpec norm,
                        IterationParams params) {
  params.Validate();
  if (sites.size() < 2) {
    throw Error(ErrorCode::kConstruction, "need at least 2 sites, got " +
                                              std::to_string(sites.size()));
  }
  norm.CheckDim(box.dim());
  for (size_t k = 0; k < sites.size(); ++k) {
    sites[k].id = int(k);
    if (sites[k].points.empty()) {
      throw Error(ErrorCode::kConstruction,
                  "site " + std::to_string(k) + " is empty");
    }
    for (const auto& p : sites[k].points) {
      if (p.dim() != box.dim()) {
        throw Error(ErrorCode::kDimension, "site " + std::to_string(k) +
                                               " has a point of dimension " +
                                               std::to_string(p.dim()));
      }
      if (!box.Contains(p)) {
        throw Error(ErrorCode::kDomain, "site " + std::to_string(k) +
                                            " point " + p.ToString() +
                                            " outside the box");
      }
    }
  }
  Problem prob(std::move(sites), std::move(box), norm, params);
  const int K = prob.K();
  prob.site_separation_.assign(K, std::numeric_limits<double>::infinity());
  prob.min_separation_ = std::numeric_limits<double>::infinity();
  for (int k = 0; k < K; ++k) {
    for (int j = k + 1; j < K; ++j) {
      double d = std::numeric_limits<double>::infinity();
      for (const auto& a : prob.sites_[k].points) {
        d = std::min(d, DistPointToPoints(a, prob.sites_[j].points, norm));
      }
      if (d <= 0) {
        throw Error(ErrorCode::kNotSeparated,
                    "sites " + std::to_string(k) + " and " +
                        std::to_string(j) + " share a point");
      }
      prob.site_separation_[k] = std::min(prob.site_separation_[k], d);
      prob.site_separation_[j] = std::min(prob.site_separation_[j], d);
      prob.min_separation_ = std::min(prob.min_separation_, d);
    }
  }
  prob.directions_ = UnitDirections(prob.dim(), params.ray_count);
  return prob;
}

double Problem::eps() const {
  return params_.eps_endpoint > 0 ? params_.eps_endpoint : 1e-6 * diameter();
}

DomOptions Problem::dom_options() const {
  DomOptions o;
  o.eps = eps();
  o.adaptive_depth = params_.adaptive_depth;
  o.refine_threshold = params_.refine_threshold > 0
                           ? params_.refine_threshold
                           : 2 * diameter() / params_.ray_count;
  o.workers = params_.workers;
  o.accelerated = params_.accelerated;
  return o;
}

std::string TupleLabel::ToString() const {
  switch (kind) {
    case Kind::kInner: return "I(" + std::to_string(n) + ")";
    case Kind::kOuter: return "O(" + std::to_string(n) + ")";
    case Kind::kLeast: return "m";
    case Kind::kGreatest: return "M";
    case Kind::kZone: return "zone";
    case Kind::kOther: return "tuple";
  }
  return "tuple";
}

DiagramTuple DiagramTuple::FromRegions(std::vector<RegionRays> regions,
                                       int samples_per_ray, TupleLabel label) {
  DiagramTuple t;
  t.label = label;
  t.clouds.reserve(regions.size());
  for (const auto& r : regions) {
    t.clouds.push_back(RegionToCloud(r, samples_per_ray));
  }
  t.regions = std::move(regions);
  return t;
}

DiagramTuple SitesTuple(const Problem& prob) {
  std::vector<RegionRays> regions;
  Vector axis = Vector::Zero(prob.dim());
  axis[0] = 1;
  for (const Site& s : prob.sites()) {
    RegionRays r;
    r.site_id = s.id;
    for (size_t i = 0; i < s.points.size(); ++i) {
      r.rays.push_back(Ray{int(i), s.points[i], axis, 0});
    }
    regions.push_back(std::move(r));
  }
  return DiagramTuple::FromRegions(std::move(regions), 1,
                                   {TupleLabel::Kind::kInner, 0});
}

DiagramTuple WholeBoxTuple(const Problem& prob, double spacing) {
  if (!(spacing > 0)) throw Error(ErrorCode::kParameter, "spacing <= 0");
  const Box& box = prob.box();
  const int d = prob.dim();
  std::vector<int> steps(d);
  for (int c = 0; c < d; ++c) {
    steps[c] = int(std::ceil((box.hi()[c] - box.lo()[c]) / spacing));
  }
  PointCloud lattice(d);
  std::vector<int> idx(d, 0);
  double x[kMaxDim];
  while (true) {
    for (int c = 0; c < d; ++c) {
      x[c] = std::min(box.hi()[c], box.lo()[c] + idx[c] * spacing);
    }
    bool on_site = false;
    for (const Site& s : prob.sites()) {
      for (const Vector& p : s.points) {
        on_site = on_site || std::equal(x, x + d, p.data());
      }
    }
    if (!on_site) lattice.Add(x);
    int c = 0;
    while (c < d && ++idx[c] > steps[c]) idx[c++] = 0;
    if (c == d) break;
  }
  DiagramTuple t;
  t.label = {TupleLabel::Kind::kOther, 0};
  for (const Site& s : prob.sites()) {
    PointCloud cloud = s.cloud();
    cloud.Append(lattice);
    t.clouds.push_back(std::move(cloud));
    t.regions.push_back(RegionRays{s.id, 0, {}});
  }
  return t;
}

}  // namespace zonelab
