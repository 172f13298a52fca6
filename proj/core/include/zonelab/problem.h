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

#ifndef ZONELAB_PROBLEM_H_
#define ZONELAB_PROBLEM_H_

#include <string>
#include <vector>

#include "zonelab/dominance.h"

namespace zonelab {

struct IterationParams {
  int ray_count = 720;
  double eps_endpoint = 0;  // absolute; <= 0 means 1e-6 * box diameter
  int samples_per_ray = 4;
  int adaptive_depth = 2;
  int max_iters = 8;
  double gap_tol = 0.01;  // fraction of the box diameter
  double refine_threshold = 0;  // <= 0 means 2 * diameter / ray_count
  int workers = 1;              // 0 means all hardware threads
  bool accelerated = true;      // false forces linear-scan distance queries
  // Grid resolution of the per-step monotonicity check in Iterate (planar
  // problems only); 0 disables it.
  int monotonicity_resolution = 128;

  void Validate() const;
};

// Sites, world, norm and knobs of one zone-diagram computation.
class Problem {
 public:
  // Throws kConstruction for K < 2, kNotSeparated when two sites are at
  // distance 0, kDomain for points outside the box.
  static Problem Create(std::vector<Site> sites, Box box, NormSpec norm,
                        IterationParams params = {});

  int K() const { return int(sites_.size()); }
  int dim() const { return box_.dim(); }
  const std::vector<Site>& sites() const { return sites_; }
  const Site& site(int k) const { return sites_[k]; }
  const Box& box() const { return box_; }
  const NormSpec& norm() const { return norm_; }
  const IterationParams& params() const { return params_; }
  IterationParams& mutable_params() { return params_; }
  double diameter() const { return box_.diameter(); }
  double eps() const;

  // r = min over k != j of d(P_k, P_j).
  double min_separation() const { return min_separation_; }
  // r_k = d(P_k, union of the other sites).
  double site_separation(int k) const { return site_separation_[k]; }

  // Ray directions for this problem (cached).
  const std::vector<Vector>& directions() const { return directions_; }

  DomOptions dom_options() const;

 private:
  Problem(std::vector<Site> sites, Box box, NormSpec norm,
          IterationParams params);

  std::vector<Site> sites_;
  Box box_;
  NormSpec norm_;
  IterationParams params_;
  double min_separation_ = 0;
  std::vector<double> site_separation_;
  std::vector<Vector> directions_;
};

struct TupleLabel {
  enum class Kind { kInner, kOuter, kLeast, kGreatest, kZone, kOther };
  Kind kind = Kind::kOther;
  int n = 0;

  std::string ToString() const;
};

// A K-indexed tuple of regions together with the point clouds used when the
// tuple is fed back into the Dom mapping.
struct DiagramTuple {
  std::vector<RegionRays> regions;
  std::vector<PointCloud> clouds;
  TupleLabel label;

  int K() const { return int(clouds.size()); }

  static DiagramTuple FromRegions(std::vector<RegionRays> regions,
                                  int samples_per_ray, TupleLabel label);
};

// I(0): every component is its own site.
DiagramTuple SitesTuple(const Problem& prob);

// Every component is (a lattice sample of) the whole box, plus its site.
// `spacing` is the lattice pitch. Lattice points that coincide with a site
// point are dropped, since Dom against them is undefined here.
DiagramTuple WholeBoxTuple(const Problem& prob, double spacing);

}  // namespace zonelab

#endif  // ZONELAB_PROBLEM_H_
