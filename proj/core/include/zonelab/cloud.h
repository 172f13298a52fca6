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

#ifndef ZONELAB_CLOUD_H_
#define ZONELAB_CLOUD_H_

#include <cstdint>
#include <span>
#include <vector>

#include "zonelab/norm.h"
#include "zonelab/vector.h"

namespace zonelab {

// A finite point sample of a region, stored flat (dim doubles per point).
class PointCloud {
 public:
  PointCloud() = default;
  explicit PointCloud(int dim) : dim_(dim) {}
  PointCloud(int dim, std::vector<double> coords);
  static PointCloud FromPoints(std::span<const Vector> points);

  int dim() const { return dim_; }
  size_t size() const { return dim_ ? coords_.size() / dim_ : 0; }
  bool empty() const { return coords_.empty(); }
  const double* at(size_t i) const { return coords_.data() + i * dim_; }
  Vector point(size_t i) const { return Vector(std::span(at(i), dim_)); }
  const std::vector<double>& coords() const { return coords_; }

  void Add(const Vector& p);
  void Add(const double* p);
  void Append(const PointCloud& other);

 private:
  int dim_ = 0;
  std::vector<double> coords_;
};

// Concatenation of several clouds (the union of regions as a point set).
PointCloud Union(std::span<const PointCloud* const> parts);

// Exact nearest-distance queries against a fixed cloud under a norm.
//
// In 2D with `accelerated` set, points are bucketed on a uniform grid with a
// summed-area table of bucket counts; a query descends through blocks of
// buckets, skipping empty blocks and blocks whose Euclidean distance times
// the norm's lower-bound constant cannot beat the current bound. Answers are
// exact, not approximate. Otherwise every query is a full linear scan.
class NearestIndex {
 public:
  NearestIndex(const PointCloud& cloud, const NormSpec& norm,
               bool accelerated = true);

  // min over the cloud of ||x - a||.
  double Nearest(const double* x) const;
  double Nearest(const Vector& x) const { return Nearest(x.data()); }

  // True iff some point a has ||x - a|| < r (strict).
  bool AnyCloserThan(const double* x, double r) const;

  size_t size() const { return n_; }
  bool accelerated() const { return accelerated_; }

 private:
  template <class Norm>
  double NearestImpl(const Norm& norm, const double* x) const;
  template <class Norm>
  bool AnyCloserImpl(const Norm& norm, const double* x, double r) const;
  template <class Norm, class Visit>
  void Descend(const Norm& norm, const double* x, double& bound, Visit& visit,
               int i0, int i1, int j0, int j1) const;

  int64_t BlockCount(int i0, int i1, int j0, int j1) const;

  NormSpec norm_;
  int dim_;
  size_t n_;
  bool accelerated_;
  double lower_bound_;
  std::vector<double> coords_;  // reordered by bucket when accelerated

  // Bucket grid (2D accelerated only).
  int gx_ = 0, gy_ = 0;
  double x0_ = 0, y0_ = 0, hx_ = 1, hy_ = 1;
  std::vector<uint32_t> start_;  // CSR offsets, row-major (j * gx_ + i)
  std::vector<int64_t> sat_;     // (gx_+1) x (gy_+1) prefix counts
};

}  // namespace zonelab

#endif  // ZONELAB_CLOUD_H_
